import random
from fractions import Fraction

import pytest

from gwmirror import MultiPoly


def test_truncation_drops_high_x_degree():
    x = MultiPoly.x(0, 1, 2)
    assert (x * x * x).is_zero
    assert not (x * x).is_zero


def test_t_z_exponents_are_not_truncated():
    t = MultiPoly.t(1, 2)
    p = t * t * t * t
    assert p.coefficient((0, 4, 0)) == 1


def test_partial_t():
    x = MultiPoly.x(0, 1, 3)
    t = MultiPoly.t(1, 3)
    assert (x * t * t).partial("t") == 2 * (x * t)


def test_partial_z_of_z_free():
    x = MultiPoly.x(0, 1, 3)
    t = MultiPoly.t(1, 3)
    assert (x * t + x * x).partial("z").is_zero


def test_partial_x():
    x = MultiPoly.x(0, 1, 3)
    assert (x * x * x).partial(0) == 3 * (x * x)


def test_log_of_one_plus_x():
    x = MultiPoly.x(0, 1, 3)
    expected = x - x * x * Fraction(1, 2) + x * x * x * Fraction(1, 3)
    assert (x + 1).log() == expected


def test_log_requires_unit_constant():
    x = MultiPoly.x(0, 1, 3)
    with pytest.raises(ValueError, match="constant term"):
        (x + 2).log()
    with pytest.raises(ValueError, match="constant term"):
        (x + 1 + MultiPoly.t(1, 3)).log()


def test_exp_log_round_trip():
    x = MultiPoly.x(0, 2, 4)
    y = MultiPoly.x(1, 2, 4)
    t = MultiPoly.t(2, 4)
    p = x * t - y * y * Fraction(3, 7) + x * y
    assert p.exp().log() == p


def _random_poly(rng: random.Random, nvars: int, xdeg: int) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, 8)):
        key = [0] * (nvars + 2)
        budget = rng.randint(1, xdeg)
        for _ in range(budget):
            key[rng.randrange(nvars)] += 1
        key[-2] = rng.randint(0, 2)
        key[-1] = rng.randint(0, 2)
        terms[tuple(key)] = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    return MultiPoly(nvars, xdeg, terms)


def test_log_respects_products():
    rng = random.Random(5)
    for _ in range(40):
        nvars, xdeg = rng.randint(1, 3), rng.randint(2, 4)
        p = _random_poly(rng, nvars, xdeg) + 1
        q = _random_poly(rng, nvars, xdeg) + 1
        assert (p * q).log() == p.log() + q.log()


def test_leibniz_rule_t_and_z():
    # t and z derivatives never change the x-degree, so Leibniz is exact
    # even across the truncation boundary
    rng = random.Random(11)
    for _ in range(40):
        nvars, xdeg = rng.randint(1, 3), rng.randint(2, 4)
        p = _random_poly(rng, nvars, xdeg)
        q = _random_poly(rng, nvars, xdeg)
        for var in ("t", "z"):
            got = (p * q).partial(var)
            assert got == p.partial(var) * q + p * q.partial(var)


def test_leibniz_rule_x_below_truncation():
    # x derivatives obey Leibniz as long as the product stays inside the bound
    rng = random.Random(12)
    for _ in range(40):
        nvars, xdeg = rng.randint(1, 3), 6
        p = _random_poly(rng, nvars, 3)
        q = _random_poly(rng, nvars, 3)
        p = MultiPoly(nvars, xdeg, p.terms)
        q = MultiPoly(nvars, xdeg, q.terms)
        got = (p * q).partial(0)
        assert got == p.partial(0) * q + p * q.partial(0)


def test_ring_mismatch_rejected():
    with pytest.raises(ValueError, match="different"):
        MultiPoly.one(1, 3) * MultiPoly.one(2, 3)


def test_term_rendering():
    x = MultiPoly.x(0, 2, 4)
    y = MultiPoly.x(1, 2, 4)
    t = MultiPoly.t(2, 4)
    z = MultiPoly.z(2, 4)
    p = x * x * y * t * t * z * Fraction(-3, 2)
    assert p.leading_term_str() == "-3/2 * x1^2*x2*t^2*z"
