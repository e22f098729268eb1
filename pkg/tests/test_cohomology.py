from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gwmirror import CohClass

from oracles import linear, pinv, ppow


def coh(*coeffs):
    return CohClass(tuple(Fraction(c) for c in coeffs))


# -- spec examples -------------------------------------------------------------


def test_nilpotency():
    h = CohClass.hyperplane(3)
    assert h * (h * h) == CohClass.zero(3)


def test_difference_of_squares():
    one, h = CohClass.one(3), CohClass.hyperplane(3)
    assert (one + h) * (one - h) == coh(1, 0, -1)


def test_one_is_identity():
    a = coh(1, 1, 0)
    assert a * CohClass.one(3) == a


def test_inv_geometric_series():
    one, h = CohClass.one(3), CohClass.hyperplane(3)
    assert (one + h).inv() == coh(1, -1, 1)


def test_inv_fifth_power():
    one, h = CohClass.one(5), CohClass.hyperplane(5)
    p = CohClass.one(5)
    for _ in range(5):
        p = p * (one + h)
    expected = coh(1, -5, 15, -35, 70)  # frozen from the long-division oracle
    assert p.inv() == expected
    assert pinv(ppow(linear(1, 1, 5), 5, 5), 5) == list(expected.coeffs)


def test_inv_scalar():
    assert CohClass.scalar(2, 4).inv() == CohClass.scalar(Fraction(1, 2), 4)


def test_exp_zero():
    assert CohClass.zero(4).exp_nilpotent() == CohClass.one(4)


def test_exp_h():
    assert CohClass.hyperplane(3).exp_nilpotent() == coh(1, 1, Fraction(1, 2))


def test_exp_2h():
    assert (CohClass.hyperplane(3) * 2).exp_nilpotent() == coh(1, 2, 2)


# -- error contracts -----------------------------------------------------------


def test_ring_len_mismatch_rejected():
    with pytest.raises(ValueError, match="ring length"):
        CohClass.one(3) * CohClass.one(4)
    with pytest.raises(ValueError, match="ring length"):
        CohClass.one(3) + CohClass.one(4)


def test_inv_of_nonunit_rejected():
    with pytest.raises(ZeroDivisionError):
        CohClass.hyperplane(3).inv()


def test_exp_of_unit_rejected():
    with pytest.raises(ValueError, match="nilpotent"):
        CohClass.one(3).exp_nilpotent()


# -- canonical string form -----------------------------------------------------


@pytest.mark.parametrize(
    "value, text",
    [
        (Fraction(2875), "2875"),
        (Fraction(-45, 8), "-45/8"),
        (Fraction(4, -6), "-2/3"),
        (Fraction(0), "0"),
    ],
)
def test_rational_canonical_text(value, text):
    assert str(value) == text
    assert value.denominator > 0


# -- algebraic properties --------------------------------------------------------

fracs = st.fractions(min_value=-4, max_value=4, max_denominator=8)


def coh_elems(ring_len):
    return st.lists(fracs, min_size=ring_len, max_size=ring_len).map(
        lambda cs: CohClass(tuple(cs))
    )


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(lambda r: st.tuples(*(coh_elems(r),) * 3)))
def test_ring_axioms(triple):
    a, b, c = triple
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(coh_elems), fracs.filter(lambda f: f != 0))
def test_unit_times_inverse(a, unit):
    a = CohClass.scalar(unit, a.ring_len) + (a - CohClass.scalar(a.coeffs[0], a.ring_len))
    assert a * a.inv() == CohClass.one(a.ring_len)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(lambda r: st.tuples(coh_elems(r), coh_elems(r))))
def test_exp_is_additive_on_nilpotents(pair):
    a, b = pair
    zero = Fraction(0)
    a = CohClass((zero,) + a.coeffs[1:])
    b = CohClass((zero,) + b.coeffs[1:])
    assert (a + b).exp_nilpotent() == a.exp_nilpotent() * b.exp_nilpotent()


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 5).flatmap(lambda r: st.tuples(coh_elems(r), coh_elems(r))))
def test_operations_keep_fractions_normalized(pair):
    a, b = pair
    for c in (a * b).coeffs + (a + b).coeffs:
        assert c.denominator > 0
        assert Fraction(c.numerator, c.denominator) == c
