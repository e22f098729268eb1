"""Log-linearity checks for the correction generating series.

The correction series that drive the mirror pipelines are, with their
geometric coefficients replaced by formal variables x_i, of the shape

    P(t, z) = sum_k x^k/k! * t^{a.k} * prod_{i=0}^{b.k-1} (c.k + z + t - i)
    Q(t)    = sum_k x^k/k! * t * prod_{i=1}^{sum(k)-1} (c.k + t - i)

(multi-index k; a.k = sum a_i k_i etc.; the sum(k) = 0 term of Q is 1 by
the falling-factorial convention).  Provided every (a_i, b_i) is (0,0),
(1,0) or (0,1), ln P is affine-linear in t and z and ln Q is linear in t:

    d2/dt2 ln P = d2/dz2 ln P = d/dt d/dz ln P = 0        (check_a1)
    (t d/dt - 1) ln Q = 0                                  (check_a2)

These are theorems, so the checks double as a test oracle: any surviving
term signals an implementation bug.  At c = 0 both series collapse to
closed forms (check_closed_forms), which pins the expansions themselves
and not just their logs.

The c_i are sampled as exact rationals rather than carried as formal
variables; many sampled instances give the same assurance at a fraction
of the cost, and the checks stay exact for every sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cohomology import as_fraction
from .multipoly import MultiPoly

ALLOWED_PAIRS = ((0, 0), (1, 0), (0, 1))


@dataclass(frozen=True)
class LemmaConfig:
    """One sampled instance: per-variable (a_i, b_i) pairs and rational c_i."""

    pairs: tuple[tuple[int, int], ...]
    cs: tuple[Fraction, ...]
    xdeg_max: int
    seed: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        object.__setattr__(self, "cs", tuple(as_fraction(c) for c in self.cs))
        if len(self.pairs) != len(self.cs):
            raise ValueError("need one c_i per variable")
        for p in self.pairs:
            if p not in ALLOWED_PAIRS:
                raise ValueError(f"(a_i, b_i) = {p} not in {ALLOWED_PAIRS}")
        if self.xdeg_max < 0:
            raise ValueError("xdeg_max must be non-negative")

    @property
    def nvars(self) -> int:
        return len(self.pairs)

    def summary(self) -> str:
        pairs = ",".join(f"({a},{b})" for a, b in self.pairs) or "-"
        cs = ",".join(str(c) for c in self.cs) or "-"
        return f"xdeg={self.xdeg_max} pairs={pairs} c={cs}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check on one configuration."""

    check: str
    config: LemmaConfig
    passed: bool
    offending: str | None = None

    def line(self, trial: int | None = None) -> str:
        head = f"trial={trial} " if trial is not None else ""
        seed = "-" if self.config.seed is None else self.config.seed
        tail = "PASS" if self.passed else f"FAIL {self.offending}"
        return f"{head}seed={seed} {self.config.summary()} {self.check} {tail}"


def sample_config(
    rng: random.Random, nvars: int, xdeg_max: int, seed: int | None = None
) -> LemmaConfig:
    """Draw (a_i, b_i) uniformly from the allowed pairs and c_i with
    numerator in [-9, 9], denominator in [1, 9]."""
    pairs = tuple(ALLOWED_PAIRS[rng.randrange(3)] for _ in range(nvars))
    cs = tuple(
        Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(nvars)
    )
    return LemmaConfig(pairs, cs, xdeg_max, seed)


# -- series builders -----------------------------------------------------------


def _multi_indices(nvars: int, total_max: int):
    if nvars == 0:
        yield ()
        return
    for head in range(total_max + 1):
        for tail in _multi_indices(nvars - 1, total_max - head):
            yield (head,) + tail


def _linear_product(constants: list[Fraction], with_z: bool) -> dict[tuple[int, int], Fraction]:
    """Expand prod_j (constants[j] + t [+ z]) as {(t_exp, z_exp): coeff}.

    Collects in s = t (+ z) first, then splits s^m binomially.
    """
    s_coeffs = [Fraction(1)]
    for cj in constants:
        nxt = [Fraction(0)] * (len(s_coeffs) + 1)
        for m, w in enumerate(s_coeffs):
            nxt[m] += w * cj
            nxt[m + 1] += w
        s_coeffs = nxt
    out: dict[tuple[int, int], Fraction] = {}
    for m, w in enumerate(s_coeffs):
        if w == 0:
            continue
        if with_z:
            for j in range(m + 1):
                out[(j, m - j)] = out.get((j, m - j), Fraction(0)) + w * comb(m, j)
        else:
            out[(m, 0)] = out.get((m, 0), Fraction(0)) + w
    return out


def build_p(cfg: LemmaConfig) -> MultiPoly:
    """Exact truncated expansion of P(t, z) over all k with sum(k) <= xdeg_max."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for k in _multi_indices(cfg.nvars, cfg.xdeg_max):
        ak = sum(a * ki for (a, _), ki in zip(cfg.pairs, k))
        bk = sum(b * ki for (_, b), ki in zip(cfg.pairs, k))
        ck = sum((c * ki for c, ki in zip(cfg.cs, k)), Fraction(0))
        coef = Fraction(1)
        for ki in k:
            coef /= factorial(ki)
        tz = _linear_product([ck - i for i in range(bk)], with_z=True)
        for (te, ze), w in tz.items():
            key = k + (te + ak, ze)
            terms[key] = terms.get(key, Fraction(0)) + coef * w
    return MultiPoly(cfg.nvars, cfg.xdeg_max, terms)


def build_q(cfg: LemmaConfig) -> MultiPoly:
    """Exact truncated expansion of Q(t); the sum(k) = 0 term is 1."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for k in _multi_indices(cfg.nvars, cfg.xdeg_max):
        s = sum(k)
        coef = Fraction(1)
        for ki in k:
            coef /= factorial(ki)
        if s == 0:
            tz = {(0, 0): Fraction(1)}
        else:
            ck = sum((c * ki for c, ki in zip(cfg.cs, k)), Fraction(0))
            tz = {
                (te + 1, 0): w  # overall factor t
                for (te, _), w in _linear_product(
                    [ck - i for i in range(1, s)], with_z=False
                ).items()
            }
        for (te, ze), w in tz.items():
            key = k + (te, ze)
            terms[key] = terms.get(key, Fraction(0)) + coef * w
    return MultiPoly(cfg.nvars, cfg.xdeg_max, terms)


# -- identity checks -----------------------------------------------------------


def check_a1(cfg: LemmaConfig) -> CheckReport:
    """All three second derivatives of ln P vanish identically."""
    ln_p = build_p(cfg).log()
    d_t = ln_p.partial("t")
    for name, residual in (
        ("d2t(lnP)", d_t.partial("t")),
        ("d2z(lnP)", ln_p.partial("z").partial("z")),
        ("dtdz(lnP)", d_t.partial("z")),
    ):
        if not residual.is_zero:
            return CheckReport("a1", cfg, False, f"{name} = {residual.leading_term_str()}")
    return CheckReport("a1", cfg, True)


def check_a2(cfg: LemmaConfig) -> CheckReport:
    """(t d/dt - 1) ln Q vanishes identically, i.e. ln Q is linear in t."""
    ln_q = build_q(cfg).log()
    t = MultiPoly.t(cfg.nvars, cfg.xdeg_max)
    residual = t * ln_q.partial("t") - ln_q
    if not residual.is_zero:
        return CheckReport("a2", cfg, False, f"(t*dt-1)lnQ = {residual.leading_term_str()}")
    return CheckReport("a2", cfg, True)


def check_closed_forms(cfg: LemmaConfig) -> CheckReport:
    """At c = 0 the series factor into elementary closed forms:

        P = exp(sum_i x_i t^{a_i}) * (1 + sum_j x_j)^{z+t}
    (the first factor over the b_i = 0 variables, the second over the
    (0,1) variables), and Q = (1 + sum_i x_i)^t.
    """
    if any(c != 0 for c in cfg.cs):
        raise ValueError("closed forms require all c_i = 0")
    v, xd = cfg.nvars, cfg.xdeg_max
    exp_arg = MultiPoly.zero(v, xd)
    binom_sum = MultiPoly.zero(v, xd)
    all_sum = MultiPoly.zero(v, xd)
    t = MultiPoly.t(v, xd)
    for i, (a, b) in enumerate(cfg.pairs):
        xi = MultiPoly.x(i, v, xd)
        all_sum = all_sum + xi
        if (a, b) == (0, 1):
            binom_sum = binom_sum + xi
        else:
            exp_arg = exp_arg + (xi * t if a == 1 else xi)
    z_plus_t = MultiPoly.z(v, xd) + t
    p_expected = exp_arg.exp() * (z_plus_t * (binom_sum + 1).log()).exp()
    q_expected = (t * (all_sum + 1).log()).exp()
    for name, got, want in (
        ("P", build_p(cfg), p_expected),
        ("Q", build_q(cfg), q_expected),
    ):
        diff = got - want
        if not diff.is_zero:
            return CheckReport(
                "closed-form", cfg, False, f"{name} mismatch at {diff.leading_term_str()}"
            )
    return CheckReport("closed-form", cfg, True)
