"""Exact truncated Dirichlet series and the counting formulas by size.

A series is stored as its first N coefficients a_1..a_N; the product is the
Dirichlet convolution (a*b)_n = sum over d|n of a_d b_{n/d}.  Coefficients
are exact rationals throughout: several of the formulas divide by a series
whose leading coefficient is 2, so intermediate inverses are not integral
even though every final count is.  Integrality is asserted only when counts
are extracted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

Rational = Fraction | int

DEFAULT_BOUND = 33


@lru_cache(maxsize=64)
def _divisor_table(n: int) -> tuple[tuple[int, ...], ...]:
    """divisors[k] lists the divisors of k, for k = 0..n (index 0 unused)."""
    table: list[list[int]] = [[] for _ in range(n + 1)]
    for d in range(1, n + 1):
        for m in range(d, n + 1, d):
            table[m].append(d)
    return tuple(tuple(row) for row in table)


class DirichletSeries:
    """Coefficients a_1..a_N of a truncated Dirichlet series, exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the coefficient a_1")

    @property
    def bound(self) -> int:
        return len(self.coeffs)

    @classmethod
    def identity(cls, bound: int) -> "DirichletSeries":
        """The convolution identity: 1 at n = 1, zero elsewhere."""
        return cls([1] + [0] * (bound - 1))

    @classmethod
    def from_function(cls, bound: int, f: Callable[[int], Rational]) -> "DirichletSeries":
        return cls([f(n) for n in range(1, bound + 1)])

    def coefficient(self, n: int) -> Fraction:
        """The coefficient of n^-s (1-indexed)."""
        if not 1 <= n <= self.bound:
            raise IndexError(f"coefficient index {n} outside 1..{self.bound}")
        return self.coeffs[n - 1]

    def _check_bound(self, other: "DirichletSeries") -> None:
        if self.bound != other.bound:
            raise ValueError(f"bound mismatch: {self.bound} != {other.bound}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DirichletSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "DirichletSeries") -> "DirichletSeries":
        self._check_bound(other)
        return DirichletSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "DirichletSeries") -> "DirichletSeries":
        self._check_bound(other)
        return DirichletSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "DirichletSeries":
        return DirichletSeries(-a for a in self.coeffs)

    def scale(self, c: Rational) -> "DirichletSeries":
        c = Fraction(c)
        return DirichletSeries(c * a for a in self.coeffs)

    def __mul__(self, other: "DirichletSeries") -> "DirichletSeries":
        """Dirichlet convolution (bounds must agree)."""
        self._check_bound(other)
        a, b = self.coeffs, other.coeffs
        divisors = _divisor_table(self.bound)
        out = []
        for n in range(1, self.bound + 1):
            out.append(sum(a[d - 1] * b[n // d - 1] for d in divisors[n]))
        return DirichletSeries(out)

    def inverse(self) -> "DirichletSeries":
        """Convolution inverse, defined when a_1 is nonzero."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with a_1 = 0 has no convolution inverse")
        lead = 1 / a[0]
        b: list[Fraction] = [lead]
        divisors = _divisor_table(self.bound)
        for n in range(2, self.bound + 1):
            acc = Fraction(0)
            for d in divisors[n]:
                if d < n:
                    acc += b[d - 1] * a[n // d - 1]
            b.append(-lead * acc)
        return DirichletSeries(b)

    def integer_coefficients(self) -> list[int]:
        """The coefficients as ints; raises if any is not an integer."""
        out = []
        for n, c in enumerate(self.coeffs, start=1):
            if c.denominator != 1:
                raise ValueError(f"coefficient a_{n} = {c} is not an integer")
            out.append(c.numerator)
        return out

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.bound > 8 else ""
        return f"DirichletSeries([{shown}{tail}], bound={self.bound})"


def convolve(a: DirichletSeries, b: DirichletSeries) -> DirichletSeries:
    return a * b


def invert(a: DirichletSeries) -> DirichletSeries:
    return a.inverse()


# --- the counting series -------------------------------------------------------

def series_zeta(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """All coefficients 1."""
    return DirichletSeries([1] * bound)


def series_C(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts all compositions by size: 2^(n-1)."""
    return DirichletSeries.from_function(bound, lambda n: 1 << (n - 1))


def series_S(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts symmetric compositions by size: 2^floor(n/2)."""
    return DirichletSeries.from_function(bound, lambda n: 1 << (n // 2))


def series_R(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts distinct ribbon Schur functions by size: 2CS / (C + S)."""
    c = series_C(bound)
    s = series_S(bound)
    r = (c * s).scale(2) * (c + s).inverse()
    r.integer_coefficients()
    return r


def series_R_decomposed(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Same sequence as ``series_R`` computed along the recursive decomposition:
    Lx = (C - S)/2, R1 = Lx/C, R = S/(1 - R1)."""
    c = series_C(bound)
    s = series_S(bound)
    lx = (c - s).scale(Fraction(1, 2))
    r1 = lx * c.inverse()
    r = s * (DirichletSeries.identity(bound) - r1).inverse()
    r.integer_coefficients()
    return r


def series_Lcross(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts asymmetric lexicographic minimal compositions: (C - S)/2."""
    lx = (series_C(bound) - series_S(bound)).scale(Fraction(1, 2))
    lx.integer_coefficients()
    return lx


def series_lexmin(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts lexicographic minimal compositions: (C + S)/2."""
    lm = (series_C(bound) + series_S(bound)).scale(Fraction(1, 2))
    lm.integer_coefficients()
    return lm


def series_P(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts normalised irreducible compositions: 2/zeta - 1 - 1/R."""
    e = DirichletSeries.identity(bound)
    p = series_zeta(bound).inverse().scale(2) - e - series_R(bound).inverse()
    p.integer_coefficients()
    return p


def series_Pstar(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts symmetric irreducible compositions: 2/zeta - 1 - 1/S."""
    e = DirichletSeries.identity(bound)
    p = series_zeta(bound).inverse().scale(2) - e - series_S(bound).inverse()
    p.integer_coefficients()
    return p


def series_Pcross(bound: int = DEFAULT_BOUND) -> DirichletSeries:
    """Counts asymmetric (normalised) irreducible compositions: 1/S - 1/R."""
    p = series_S(bound).inverse() - series_R(bound).inverse()
    p.integer_coefficients()
    return p


def series_R_refined(bound: int = DEFAULT_BOUND, z: int = 1) -> DirichletSeries:
    """Normal forms weighted z^(number of asymmetric factors):
    2CS / (2C - z(C - S)).

    The leading denominator coefficient is 2 for every z, so the inverse
    always exists; z in {0, 1, 2} specializes to S, R and C.
    """
    c = series_C(bound)
    s = series_S(bound)
    numerator = (c * s).scale(2)
    denominator = c.scale(2) - (c - s).scale(z)
    r = numerator * denominator.inverse()
    r.integer_coefficients()
    return r
