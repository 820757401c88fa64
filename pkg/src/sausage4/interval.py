"""Directed-rounding interval arithmetic on binary64 endpoints.

Every arithmetic operation widens each computed endpoint by one ulp in the
unsafe direction (``math.nextafter``).  IEEE-754 guarantees the primitive
operations +, -, *, / and sqrt are correctly rounded, so the true real result
always lies within half an ulp of the computed endpoint; the one-ulp widening
therefore preserves containment without touching hardware rounding modes.
Constructors from machine numbers are exact and are not widened.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def float_below(q) -> float:
    """Largest binary64 value that is <= the exact rational q."""
    f = float(q)
    if math.isinf(f):
        return math.nextafter(f, -_INF) if f > 0 else f
    if Fraction(f) > Fraction(q):
        return math.nextafter(f, -_INF)
    return f


def float_above(q) -> float:
    """Smallest binary64 value that is >= the exact rational q."""
    f = float(q)
    if math.isinf(f):
        return math.nextafter(f, _INF) if f < 0 else f
    if Fraction(f) < Fraction(q):
        return math.nextafter(f, _INF)
    return f


class Interval:
    """A closed interval [lo, hi] that certifiably contains a real value."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise DomainError("NaN endpoint in interval")
        if lo > hi:
            raise DomainError(f"inverted interval [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    # -- constructors -------------------------------------------------

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    @classmethod
    def from_int(cls, n: int) -> "Interval":
        if -(2**53) <= n <= 2**53:
            f = float(n)
            return cls(f, f)
        return cls(float_below(n), float_above(n))

    @classmethod
    def from_fraction(cls, q) -> "Interval":
        return cls(float_below(q), float_above(q))

    @classmethod
    def hull(cls, a: "Interval", b: "Interval") -> "Interval":
        return cls(min(a.lo, b.lo), max(a.hi, b.hi))

    # -- queries ------------------------------------------------------

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x) -> bool:
        """Exact containment test; x may be int, float or Fraction."""
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        q = Fraction(x)
        return Fraction(self.lo) <= q <= Fraction(self.hi)

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: "Interval") -> "Interval":
        if not self.intersects(other):
            raise DomainError("empty intersection")
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def strictly_below(self, other: "Interval") -> bool:
        """Certified: every x in self is < every y in other."""
        return self.hi < other.lo

    def strictly_above(self, other: "Interval") -> bool:
        return self.lo > other.hi

    def is_finite(self) -> bool:
        return math.isfinite(self.lo) and math.isfinite(self.hi)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo - other.hi), _up(self.hi - other.lo))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        p = (self.lo * other.lo, self.lo * other.hi,
             self.hi * other.lo, self.hi * other.hi)
        lo, hi = min(p), max(p)
        if math.isnan(lo) or math.isnan(hi):
            raise DomainError("indeterminate product (0 * inf)")
        return Interval(_down(lo), _up(hi))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0.0 <= other.hi:
            raise DomainError("division by an interval containing 0")
        p = (self.lo / other.lo, self.lo / other.hi,
             self.hi / other.lo, self.hi / other.hi)
        return Interval(_down(min(p)), _up(max(p)))

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise DomainError("sqrt of an interval reaching below 0")
        return Interval(_down(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))

    def abs(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return -self
        return Interval(0.0, max(-self.lo, self.hi))

    def powi(self, n: int) -> "Interval":
        """n-th power, n >= 0.  Implemented by interval squaring so that only
        correctly-rounded primitives are used (libm pow is not)."""
        if n < 0:
            raise DomainError("powi exponent must be >= 0")
        if n == 0:
            return Interval(1.0, 1.0)
        base = self.abs() if n % 2 == 0 else self
        acc = None
        sq = base
        k = n
        while k:
            if k & 1:
                acc = sq if acc is None else acc * sq
            k >>= 1
            if k:
                sq = sq * sq
        return acc

    def scale_int(self, k: int) -> "Interval":
        """Multiply by an exact integer."""
        if abs(k) > 2**53:
            return self * Interval.from_int(k)
        kf = float(k)
        if k >= 0:
            return Interval(_down(kf * self.lo), _up(kf * self.hi))
        return Interval(_down(kf * self.hi), _up(kf * self.lo))

    # -- misc ---------------------------------------------------------

    def widened(self, factor: float) -> "Interval":
        """Inflate the width about the midpoint by `factor` (stress testing)."""
        if factor == 1.0:
            return self
        if factor < 1.0:
            raise DomainError("widening factor must be >= 1")
        m = self.mid()
        half = 0.5 * self.width() * factor
        return Interval(_down(m - half), _up(m + half))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Interval) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __reduce__(self):
        return (Interval, (self.lo, self.hi))


def ceil_conservative(x: Interval, direction: str) -> int:
    """Certified bound on ceil(t) for any real t in x.

    direction="lower" gives ceil(x.lo), a lower bound of ceil(t);
    direction="upper" gives ceil(x.hi), an upper bound.
    """
    if not x.is_finite():
        raise DomainError("ceil_conservative requires finite endpoints")
    if direction == "lower":
        return math.ceil(x.lo)
    if direction == "upper":
        return math.ceil(x.hi)
    raise DomainError(f"unknown direction {direction!r}")
