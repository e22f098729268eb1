"""End-to-end invariant pipelines.

Three computations share one backbone.  Write the naive hypergeometric
series of a hypersurface Y = l*H in P^n as F_0 + F_1 H + F_2 H^2 + ...:

* quintic threefold (n = 4, l = 5): corrections from curves inside Y turn
  the naive series into the true one by the scaling F_0 exp(H F_1/F_0) and
  the variable change q -> q exp(F_1/(5 F_0)).  Solving
      F_2 = F_1^2/(2 F_0) + (1/5) sum_{d>0} d n_d q^{5d} F_0 exp(d F_1/F_0)
  order by order yields the virtual counts n_d of degree-d rational curves
  on the quintic.  An independent route (divide by the scaling, revert the
  variable change, read off coefficients) must reproduce the same table.

* plane cubic (n = 2, l = 3): the analogous series has no H^0 part; with
  F_1, F_2 its H and H^2 parts, solving
      F_2 = F_1^2/2 + sum_{d>0} v_d q^{3d} exp(d F_1)
  gives v_d, the virtual number of degree-d rational plane curves meeting
  a smooth cubic at a single point with multiplicity 3d.  These repackage
  as local invariants K_d of the canonical bundle of P^2 via
  v_d = (-1)^d * 3d * K_d.

* low degree (l <= n-1): no corrections arise at all, so the naive series
  coefficients ARE the invariants of Y.

All recursions are solved strictly order by order in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import CohClass
from .hypergeom import ambient_I, hyper_factor, naive_series
from .series import DSeries

QUINTIC_RING = 5  # cohomology of P^4
CUBIC_RING = 3  # cohomology of P^2


@dataclass(frozen=True)
class MirrorData:
    """Scalar H-components of a naive series plus the mirror exponent.

    ``f0`` is None for the plane-cubic case, whose series has no H^0 part.
    ``mirror_exponent`` is F_1/(l F_0) (with F_0 = 1 where it is absent),
    the series whose exponential implements the change of variables.
    """

    f0: DSeries | None
    f1: DSeries
    f2: DSeries
    mirror_exponent: DSeries


@dataclass(frozen=True)
class InvariantTable:
    """Ordered exact table degree -> invariant."""

    case_name: str
    entries: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        degrees = [d for d, _ in self.entries]
        if degrees and degrees[0] != 1:
            raise ValueError("tables start at degree 1")
        if any(b <= a for a, b in zip(degrees, degrees[1:])):
            raise ValueError("degrees must be strictly increasing")

    def values(self) -> list[Fraction]:
        return [v for _, v in self.entries]

    def value_at(self, d: int) -> Fraction:
        return dict(self.entries)[d]


# -- quintic threefold -------------------------------------------------------


def quintic_f(dmax: int) -> MirrorData:
    """F_0, F_1, F_2 of the quintic naive series, plus F_1/(5 F_0)."""
    series = naive_series(4, 5, dmax, i_from=1)
    f0 = series.extract_h(0)
    f1 = series.extract_h(1)
    f2 = series.extract_h(2)
    return MirrorData(f0, f1, f2, f1 * f0.inv() * Fraction(1, 5))


def reconstruct_p_quintic(
    md: MirrorData, t_order: int = 1
) -> tuple[DSeries, ...]:
    """Taylor coefficients (P_0, ..., P_{t_order}) of the correction series
    P(t) = F_0 exp((t/5 + H) F_1/F_0).

    P is log-linear in t, so P_k = P_0 (F_1/(5 F_0))^k / k!.  In particular
    the H-expansion of P_0 starts F_0 + H F_1 + (H^2/2) F_1^2/F_0.
    """
    if t_order < 0:
        raise ValueError("t_order must be non-negative")
    if md.f0 is None:
        raise ValueError("needs quintic-style mirror data (F_0 present)")
    m = md.f1 * md.f0.inv()  # F_1/F_0
    p0 = md.f0.to_cohomology(QUINTIC_RING) * m.to_cohomology(QUINTIC_RING, 1).exp()
    out = [p0]
    slope = (m * Fraction(1, 5)).to_cohomology(QUINTIC_RING)
    for k in range(1, t_order + 1):
        out.append(out[-1] * slope * Fraction(1, k))
    return tuple(out)


def quintic_invariants(dmax: int) -> InvariantTable:
    """Virtual counts n_d of degree-d rational curves on the quintic,
    solved degree by degree from the H^3 component of the corrected series."""
    md = quintic_f(dmax)
    base = md.f2 - md.f1 * md.f1 * md.f0.inv() * Fraction(1, 2)
    kernels = _exp_kernels(md.f1 * md.f0.inv(), md.f0, dmax)
    weights = [Fraction(d, 5) for d in range(dmax + 1)]
    solved = solve_correction_series(base, kernels, weights)
    return InvariantTable("quintic", tuple(enumerate(solved, start=1)))


def quintic_recursion_rhs(md: MirrorData, table: InvariantTable) -> DSeries:
    """Right-hand side F_1^2/(2 F_0) + (1/5) sum d n_d q^{5d} F_0 exp(d F_1/F_0)
    with the table's values substituted back in; equals F_2 when the table
    solves the recursion."""
    dmax = md.f2.dmax
    kernels = _exp_kernels(md.f1 * md.f0.inv(), md.f0, dmax)
    acc = md.f1 * md.f1 * md.f0.inv() * Fraction(1, 2)
    for d, n_d in table.entries:
        acc = acc + DSeries.monomial(d, dmax, 5, Fraction(d, 5) * n_d) * kernels[d]
    return acc


def quintic_crosscheck(dmax: int) -> InvariantTable:
    """The same table by the reversion route.

    Divide the full naive series (including its leading 5H factor) by the
    scaling series P_0 and rewrite it in the transformed variable; for
    d >= 1 the index-d coefficient is the true 1-point class of the
    quintic, with H^0..H^2 parts zero and H^3 part d*n_d.
    """
    md = quintic_f(dmax)
    p0 = reconstruct_p_quintic(md, 0)[0]
    full = naive_series(4, 5, dmax, i_from=0)
    g = md.f1 * md.f0.inv()  # index-space exponent: exp(5 * mirror_exponent)
    corrected = (full * p0.inv()).substitute(g.revert_exp())
    entries = []
    for d in range(1, dmax + 1):
        c = corrected.coeffs[d]
        if any(c.coeffs[k] != 0 for k in range(3)):
            raise RuntimeError(
                f"reversion route left a low H-power residue at degree {d}: {c}"
            )
        entries.append((d, c.coeffs[3] / d))
    return InvariantTable("quintic", tuple(entries))


# -- plane cubic / local P^2 --------------------------------------------------


def localp2_f(dmax: int) -> MirrorData:
    """F_1, F_2 of the plane-cubic series
    sum_{d>0} 3H prod_{i=1}^{3d-1}(3H+i) / prod_{i=1}^{d}(H+i)^3 q^{3d}."""
    h3 = CohClass.hyperplane(CUBIC_RING) * 3
    coeffs = [CohClass.zero(CUBIC_RING)]
    for d in range(1, dmax + 1):
        # twist product stops at 3d-1: the final multiplicity step is the
        # invariant being defined, not a factor of the series.
        acc = h3
        for i in range(1, 3 * d):
            acc = acc * (h3 + CohClass.scalar(i, CUBIC_RING))
        coeffs.append(acc * ambient_I(2, d))
    series = DSeries(tuple(coeffs), step=3)
    f1 = series.extract_h(1)
    f2 = series.extract_h(2)
    return MirrorData(None, f1, f2, f1 * Fraction(1, 3))


def localp2_invariants(dmax: int) -> InvariantTable:
    """Virtual counts of degree-d rational plane curves with a single point
    of multiplicity-3d contact with a smooth cubic."""
    md = localp2_f(dmax)
    base = md.f2 - md.f1 * md.f1 * Fraction(1, 2)
    kernels = _exp_kernels(md.f1, None, dmax)
    weights = [Fraction(1)] * (dmax + 1)
    solved = solve_correction_series(base, kernels, weights)
    return InvariantTable("local-p2", tuple(enumerate(solved, start=1)))


def localp2_recursion_rhs(md: MirrorData, table: InvariantTable) -> DSeries:
    """F_1^2/2 + sum_d v_d q^{3d} exp(d F_1) with the table substituted back."""
    dmax = md.f2.dmax
    kernels = _exp_kernels(md.f1, None, dmax)
    acc = md.f1 * md.f1 * Fraction(1, 2)
    for d, v_d in table.entries:
        acc = acc + DSeries.monomial(d, dmax, 3, v_d) * kernels[d]
    return acc


def localp2_kd(dmax: int) -> InvariantTable:
    """Local invariants K_d of the canonical bundle of P^2, repackaging the
    contact counts via K_d = (-1)^d v_d / (3d)."""
    table = localp2_invariants(dmax)
    entries = tuple(
        (d, Fraction((-1) ** d) * v / (3 * d)) for d, v in table.entries
    )
    return InvariantTable("local-p2-kd", entries)


# -- correction-free low degrees ----------------------------------------------


def naive_invariants(n: int, l: int, dmax: int) -> tuple[CohClass, ...]:
    """1-point classes of a degree-l hypersurface in P^n for l <= n-1, where
    no corrections arise: the d-th entry is
    prod_{i=0}^{l*d}(l*H+i) * ambient_I(n, d) for d = 1..dmax.

    The degree-0 class (which is Y itself by convention) is not emitted.
    """
    if not 1 <= l <= n - 1:
        raise ValueError(
            f"degree l={l} out of range: correction terms vanish only for "
            f"hypersurfaces of degree at most n-1={n - 1} in P^{n}"
        )
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    return tuple(
        hyper_factor(l, d, 0, n + 1) * ambient_I(n, d) for d in range(1, dmax + 1)
    )


# -- shared solver -------------------------------------------------------------


def solve_correction_series(
    base: DSeries,
    kernels: Sequence[DSeries],
    weights: Sequence[Fraction],
) -> list[Fraction]:
    """Solve base = sum_{d>=1} weights[d] * u_d * Q^d * kernels[d] for the u_d.

    kernels[d] must have constant coefficient 1, which makes the system
    triangular: the index-e equation determines u_e from u_1..u_{e-1}.
    Returns [u_1, ..., u_dmax].
    """
    dmax = base.dmax
    out: list[Fraction] = []
    for e in range(1, dmax + 1):
        s = Fraction(0)
        for d in range(1, e):
            s += weights[d] * out[d - 1] * kernels[d].coeffs[e - d]
        out.append((base.coeffs[e] - s) / weights[e])
    return out


def _exp_kernels(m: DSeries, f0: DSeries | None, dmax: int) -> list[DSeries]:
    """kernels[d] = F_0 * exp(d*m) for d = 0..dmax (F_0 = 1 when None)."""
    e1 = m.exp()
    kernels = [DSeries.one(dmax, m.step) if f0 is None else f0]
    for _ in range(dmax):
        kernels.append(kernels[-1] * e1)
    return kernels
