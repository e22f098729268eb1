"""Sparse truncated polynomials in x_1..x_v, t, z over Q.

Terms are stored in a dict keyed by the full exponent vector
(k_1, ..., k_v, t_exp, z_exp); only nonzero coefficients are kept, and any
term whose total x-degree k_1+...+k_v exceeds ``xdeg_max`` is discarded by
every operation.  t and z are NOT truncated: series in this ring are
polynomial in t, z within each x-degree, so no bound is needed.

E.g. with two variables, 3*x1^2*t - z/2 is
``{(2, 0, 1, 0): Fraction(3), (0, 0, 0, 1): Fraction(-1, 2)}``.

Instances are treated as immutable; do not mutate ``terms`` after
construction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .cohomology import Rational, as_fraction

Key = tuple[int, ...]  # (k_1..k_v, t_exp, z_exp)


def _xdeg(key: Key) -> int:
    return sum(key[:-2])


@dataclass(frozen=True, eq=True)
class MultiPoly:
    nvars: int
    xdeg_max: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: dict[Key, Fraction] = {}
        for key, c in self.terms.items():
            key = tuple(key)
            if len(key) != self.nvars + 2:
                raise ValueError(
                    f"exponent vector {key} has wrong length for {self.nvars} variables"
                )
            if any(e < 0 for e in key):
                raise ValueError("negative exponent")
            if _xdeg(key) > self.xdeg_max:
                continue
            c = as_fraction(c)
            if c != 0:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, xdeg_max: int) -> MultiPoly:
        return cls(nvars, xdeg_max, {})

    @classmethod
    def const(cls, value: Rational, nvars: int, xdeg_max: int) -> MultiPoly:
        return cls(nvars, xdeg_max, {(0,) * (nvars + 2): as_fraction(value)})

    @classmethod
    def one(cls, nvars: int, xdeg_max: int) -> MultiPoly:
        return cls.const(1, nvars, xdeg_max)

    @classmethod
    def x(cls, i: int, nvars: int, xdeg_max: int) -> MultiPoly:
        """The variable x_{i+1} (0-based index i)."""
        if not 0 <= i < nvars:
            raise ValueError("variable index out of range")
        key = [0] * (nvars + 2)
        key[i] = 1
        return cls(nvars, xdeg_max, {tuple(key): Fraction(1)})

    @classmethod
    def t(cls, nvars: int, xdeg_max: int) -> MultiPoly:
        key = [0] * (nvars + 2)
        key[-2] = 1
        return cls(nvars, xdeg_max, {tuple(key): Fraction(1)})

    @classmethod
    def z(cls, nvars: int, xdeg_max: int) -> MultiPoly:
        key = [0] * (nvars + 2)
        key[-1] = 1
        return cls(nvars, xdeg_max, {tuple(key): Fraction(1)})

    # -- structure -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_ring(self, other: MultiPoly) -> None:
        if self.nvars != other.nvars or self.xdeg_max != other.xdeg_max:
            raise ValueError("polynomials live in different truncated rings")

    def coefficient(self, key: Key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: Union[MultiPoly, Rational]) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, self.nvars, self.xdeg_max)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return MultiPoly(self.nvars, self.xdeg_max, out)

    __radd__ = __add__

    def __sub__(self, other: Union[MultiPoly, Rational]) -> MultiPoly:
        return self + (-other if isinstance(other, MultiPoly) else -as_fraction(other))

    def __neg__(self) -> MultiPoly:
        return MultiPoly(
            self.nvars, self.xdeg_max, {k: -c for k, c in self.terms.items()}
        )

    def __mul__(self, other: Union[MultiPoly, Rational]) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            f = as_fraction(other)
            return MultiPoly(
                self.nvars, self.xdeg_max, {k: c * f for k, c in self.terms.items()}
            )
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_ring(other)
        # bucket by x-degree so pairs beyond the truncation are never formed
        by_deg_a: dict[int, list] = defaultdict(list)
        for key, c in self.terms.items():
            by_deg_a[_xdeg(key)].append((key, c))
        by_deg_b: dict[int, list] = defaultdict(list)
        for key, c in other.terms.items():
            by_deg_b[_xdeg(key)].append((key, c))
        out: dict[Key, Fraction] = defaultdict(Fraction)
        for da, items_a in by_deg_a.items():
            for db, items_b in by_deg_b.items():
                if da + db > self.xdeg_max:
                    continue
                for ka, ca in items_a:
                    for kb, cb in items_b:
                        key = tuple(a + b for a, b in zip(ka, kb))
                        out[key] += ca * cb
        return MultiPoly(self.nvars, self.xdeg_max, out)

    __rmul__ = __mul__

    # -- calculus -------------------------------------------------------------

    def partial(self, var: Union[str, int]) -> MultiPoly:
        """Formal partial derivative; var is 't', 'z', or an x index."""
        if var == "t":
            pos = self.nvars
        elif var == "z":
            pos = self.nvars + 1
        elif isinstance(var, int) and 0 <= var < self.nvars:
            pos = var
        else:
            raise ValueError(f"unknown variable {var!r}")
        out: dict[Key, Fraction] = {}
        for key, c in self.terms.items():
            e = key[pos]
            if e == 0:
                continue
            nk = key[:pos] + (e - 1,) + key[pos + 1 :]
            out[nk] = out.get(nk, Fraction(0)) + c * e
        return MultiPoly(self.nvars, self.xdeg_max, out)

    def log(self) -> MultiPoly:
        """log of a polynomial whose x-degree-0 part is exactly 1.

        With u = self - 1 of positive x-degree, the series
        sum_m (-1)^{m+1} u^m / m terminates at m = xdeg_max.
        """
        one_key = (0,) * (self.nvars + 2)
        x0 = {k: c for k, c in self.terms.items() if _xdeg(k) == 0}
        if x0 != {one_key: Fraction(1)}:
            raise ValueError("log requires constant term exactly 1")
        u = self - 1
        acc = MultiPoly.zero(self.nvars, self.xdeg_max)
        pw = MultiPoly.one(self.nvars, self.xdeg_max)
        for m in range(1, self.xdeg_max + 1):
            pw = pw * u
            acc = acc + pw * Fraction((-1) ** (m + 1), m)
        return acc

    def exp(self) -> MultiPoly:
        """exp of a polynomial all of whose terms have positive x-degree."""
        if any(_xdeg(k) == 0 for k in self.terms):
            raise ValueError("exp requires every term to have positive x-degree")
        acc = MultiPoly.one(self.nvars, self.xdeg_max)
        pw = MultiPoly.one(self.nvars, self.xdeg_max)
        for m in range(1, self.xdeg_max + 1):
            pw = pw * self * Fraction(1, m)
            acc = acc + pw
        return acc

    # -- rendering --------------------------------------------------------------

    def term_str(self, key: Key) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)] + ["t", "z"]
        monos = []
        for name, e in zip(names, key):
            if e == 1:
                monos.append(name)
            elif e > 1:
                monos.append(f"{name}^{e}")
        body = "*".join(monos) if monos else "1"
        return f"{self.terms.get(tuple(key), Fraction(0))} * {body}"

    def leading_term_str(self) -> str:
        """Lexicographically-first stored term, for failure reports."""
        if self.is_zero:
            return "0"
        return self.term_str(min(self.terms))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(self.term_str(k) for k in sorted(self.terms))
