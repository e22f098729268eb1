"""Hypergeometric building blocks for hypersurfaces in projective space.

For a degree-l hypersurface Y in P^n (cohomology class Y = l*H) the three
ingredients are:

* ``ambient_I(n, d)``: the degree-d coefficient of the genus-zero 1-point
  series of P^n itself, prod_{i=1}^{d} (H+i)^{-(n+1)}.
* ``hyper_factor(l, d, i_from, ring_len)``: the finite twist product
  prod_{i=i_from}^{l*d} (l*H + i) that raises the tangency multiplicity
  to Y one step at a time; ``i_from`` selects whether the i = 0 factor
  (which is Y itself) is included.
* ``naive_series(n, l, dmax, i_from)``: their product as a q-series, the
  generating series Y would have if reducible-curve corrections never
  contributed.
"""

from __future__ import annotations

from .cohomology import CohClass
from .series import DSeries


def ambient_I(n: int, d: int) -> CohClass:
    """prod_{i=1}^{d} (H+i)^{-(n+1)} in Q[H]/(H^{n+1}); d = 0 gives 1."""
    if n < 2:
        raise ValueError("ambient projective space needs n >= 2")
    if d < 0:
        raise ValueError("curve degree must be non-negative")
    ring_len = n + 1
    prod = CohClass.one(ring_len)
    h = CohClass.hyperplane(ring_len)
    for i in range(1, d + 1):
        prod = prod * (h + CohClass.scalar(i, ring_len))
    pw = CohClass.one(ring_len)
    for _ in range(n + 1):
        pw = pw * prod
    return pw.inv()


def hyper_factor(l: int, d: int, i_from: int, ring_len: int) -> CohClass:
    """prod_{i=i_from}^{l*d} (l*H + i) in Q[H]/(H^ring_len).

    Empty ranges give 1, so d = 0 with i_from = 1 is the empty product
    while d = 0 with i_from = 0 is the single factor l*H.
    """
    if l < 1 or d < 0 or ring_len < 1:
        raise ValueError("need l >= 1, d >= 0, ring_len >= 1")
    if i_from not in (0, 1):
        raise ValueError("i_from must be 0 or 1")
    lh = CohClass.hyperplane(ring_len) * l
    acc = CohClass.one(ring_len)
    for i in range(i_from, l * d + 1):
        acc = acc * (lh + CohClass.scalar(i, ring_len))
    return acc


def naive_series(n: int, l: int, dmax: int, i_from: int = 1) -> DSeries:
    """The q-series with index-d coefficient
    hyper_factor(l, d, i_from, n+1) * ambient_I(n, d), graded with step l.

    Requires 1 <= l <= n+1: for larger l the anticanonical class of the
    hypersurface fails to be nef and the construction does not apply.
    """
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    if not 1 <= l <= n + 1:
        raise ValueError(
            f"degree l={l} exceeds n+1={n + 1}: -K_Y nef required"
        )
    coeffs = tuple(
        hyper_factor(l, d, i_from, n + 1) * ambient_I(n, d) for d in range(dmax + 1)
    )
    return DSeries(coeffs, step=l)
