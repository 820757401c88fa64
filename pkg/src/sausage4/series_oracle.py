"""Exact rational enclosures of the transcendental constants.

Everything here is computed in `fractions.Fraction`, with explicit series
remainder bounds, so the results are certified independently of the binary64
interval kernel.  This module is the reference oracle: the frozen endpoint
table in `constants.py` was generated from it and the test suite re-verifies
that table against a fresh evaluation.

Conventions: a "bounds" function returns a pair (lo, hi) of Fractions with
lo <= value <= hi, tightened to roughly 10**-digits.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, InternalError

RatPair = tuple[Fraction, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _pow10(d: int) -> int:
    return 10**d


def round_outward(lo: Fraction, hi: Fraction, digits: int) -> RatPair:
    """Round a rational enclosure outward to denominator 10**digits."""
    p = _pow10(digits)
    return Fraction(math.floor(lo * p), p), Fraction(math.ceil(hi * p), p)


def _round_point(q: Fraction, digits: int) -> RatPair:
    return round_outward(q, q, digits)


def sqrt_bounds(q: Fraction, digits: int) -> RatPair:
    """Enclosure of sqrt(q) via integer square roots: isqrt(floor(q*10^2d))
    never exceeds sqrt(q)*10^d, and +1 on the ceiling side never falls short."""
    if q < 0:
        raise DomainError("sqrt of a negative rational")
    p = _pow10(digits)
    scaled = q * p * p
    floor_scaled = scaled.numerator // scaled.denominator
    ceil_scaled = -((-scaled.numerator) // scaled.denominator)
    lo_int = math.isqrt(floor_scaled)
    hi_int = math.isqrt(ceil_scaled) + 1
    return Fraction(lo_int, p), Fraction(hi_int, p)


def _atan_series(x: Fraction, digits: int) -> RatPair:
    """Alternating Maclaurin series for atan on 0 <= x < 1: consecutive
    partial sums bracket the limit because the terms decrease (ratio < x^2)."""
    if not (0 <= x < 1):
        raise InternalError(f"series argument {x} outside [0,1)")
    if x == 0:
        return _ZERO, _ZERO
    tol = Fraction(1, _pow10(digits))
    x2 = x * x
    term = x
    total = _ZERO
    j = 0
    while term > tol:
        total += term if j % 2 == 0 else -term
        term = term * x2 * (2 * j + 1) / (2 * j + 3)
        j += 1
        if j > 10000:
            raise InternalError("atan series failed to converge")
    # one more signed term past the cut gives the other bracket
    nxt = total + (term if j % 2 == 0 else -term)
    return (min(total, nxt), max(total, nxt))


@lru_cache(maxsize=None)
def pi_bounds(digits: int) -> RatPair:
    """Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239)."""
    d = digits + 5
    a5 = _atan_series(Fraction(1, 5), d)
    a239 = _atan_series(Fraction(1, 239), d)
    lo = 16 * a5[0] - 4 * a239[1]
    hi = 16 * a5[1] - 4 * a239[0]
    return round_outward(lo, hi, digits)


def _sin_cos_series(x: Fraction, digits: int, which: str) -> RatPair:
    """Taylor series at 0 with the Lagrange remainder |x|^N / N! added on both
    sides.  Valid for any rational x; intended for |x| <= 4."""
    tol = Fraction(1, _pow10(digits))
    xx = x * x
    if which == "sin":
        term = x
        k = 1
    else:
        term = _ONE
        k = 0
    total = _ZERO
    sign = 1
    while True:
        total += sign * term
        # next term magnitude: |x|^(k+2) / (k+2)!
        term = term * xx / ((k + 1) * (k + 2))
        k += 2
        sign = -sign
        bound = abs(term)
        if bound < tol:
            return total - bound, total + bound
        if k > 2000:
            raise InternalError("sin/cos series failed to converge")


def sin_bounds(x: Fraction, digits: int) -> RatPair:
    xl, xh = _round_point(x, digits + 10)
    los, his = [], []
    for xe in (xl, xh):
        lo, hi = _sin_cos_series(xe, digits + 5, "sin")
        los.append(lo)
        his.append(hi)
    # |sin'| <= 1, so the argument rounding slack (10^-(digits+10)) is covered
    slack = Fraction(1, _pow10(digits + 9))
    return round_outward(min(los) - slack, max(his) + slack, digits)


def cos_bounds(x: Fraction, digits: int) -> RatPair:
    xl, xh = _round_point(x, digits + 10)
    los, his = [], []
    for xe in (xl, xh):
        lo, hi = _sin_cos_series(xe, digits + 5, "cos")
        los.append(lo)
        his.append(hi)
    slack = Fraction(1, _pow10(digits + 9))
    return round_outward(min(los) - slack, max(his) + slack, digits)


def atan_bounds(x: Fraction, digits: int) -> RatPair:
    """Enclosure of atan(x) for any rational x >= 0 (reciprocal identity for
    x >= 1), outward-rounded arguments keep denominators small."""
    if x < 0:
        lo, hi = atan_bounds(-x, digits)
        return -hi, -lo
    xl, xh = _round_point(x, digits + 10)
    return round_outward(_atan_point_lo(xl, digits + 5), _atan_point_hi(xh, digits + 5), digits)


def _atan_point_lo(x: Fraction, d: int) -> Fraction:
    if x < 1:
        return _atan_series(x, d)[0]
    pl, _ = pi_bounds(d)
    inv_hi = _atan_series(1 / x, d)[1] if x > 1 else Fraction(0)
    if x == 1:
        # atan(1) = pi/4
        return pl / 4
    return pl / 2 - inv_hi


def _atan_point_hi(x: Fraction, d: int) -> Fraction:
    if x < 1:
        return _atan_series(x, d)[1]
    _, ph = pi_bounds(d)
    if x == 1:
        return ph / 4
    inv_lo = _atan_series(1 / x, d)[0]
    return ph / 2 - inv_lo


def tan_bounds(x: Fraction, digits: int) -> RatPair:
    """tan on arguments with certified cos > 0 (our use stays in [0, pi/2))."""
    d = digits + 5
    sl, sh = sin_bounds(x, d)
    cl, ch = cos_bounds(x, d)
    if cl <= 0:
        raise DomainError(f"tan argument {float(x):.6g} too close to pi/2")
    corners = (sl / cl, sl / ch, sh / cl, sh / ch)
    return round_outward(min(corners), max(corners), digits)


@lru_cache(maxsize=None)
def acos_one_third_bounds(digits: int) -> RatPair:
    """Interval Newton for the root of f(t) = cos t - 1/3 on [1.2, 1.3].

    cos is positive on [0, 1.45] (checked below), so sin is increasing on the
    bracket and f' = -sin is enclosed by the endpoint evaluations.
    """
    third = Fraction(1, 3)
    lo, hi = Fraction(12, 10), Fraction(13, 10)
    d = 25
    cpos, _ = cos_bounds(Fraction(29, 20), 20)
    if cpos <= 0:
        raise InternalError("cos positivity check failed on [0, 1.45]")
    # bracket check: f(lo) > 0 > f(hi)
    if not (cos_bounds(lo, 20)[0] > third > cos_bounds(hi, 20)[1]):
        raise InternalError("initial bracket does not straddle the root")
    for _ in range(8):
        d = min(2 * d, digits + 15)
        c = round_outward((lo + hi) / 2, (lo + hi) / 2, d)[0]
        fl, fh = cos_bounds(c, d)
        fl, fh = fl - third, fh - third
        sl = sin_bounds(lo, d)[0]
        sh = sin_bounds(hi, d)[1]
        # f' in [-sh, -sl], strictly negative
        if sl <= 0:
            raise InternalError("sin lower bound not positive on bracket")
        corners = (fl / -sh, fl / -sl, fh / -sh, fh / -sl)
        nlo, nhi = c - max(corners), c - min(corners)
        lo, hi = max(lo, nlo), min(hi, nhi)
        if lo > hi:
            raise InternalError("interval Newton produced empty intersection")
        if hi - lo < Fraction(1, _pow10(digits + 5)):
            break
    return round_outward(lo, hi, digits)


def atan_two_sqrt2_bounds(digits: int) -> RatPair:
    """Enclosure of atan(2*sqrt(2)) = acos(1/3); independent cross-check route."""
    d = digits + 10
    s2l, s2h = sqrt_bounds(Fraction(2), d)
    return _atan_point_lo(2 * s2l, d), _atan_point_hi(2 * s2h, d)


def constant_table_bounds(digits: int = 40) -> dict[str, RatPair]:
    """Rational enclosures for every entry of the frozen constant table."""
    s2 = sqrt_bounds(Fraction(2), digits)
    s3 = sqrt_bounds(Fraction(3), digits)
    pp = pi_bounds(digits)
    ac = acos_one_third_bounds(digits)
    silver_lo = 3 - 2 * s2[1]
    silver_hi = 3 - 2 * s2[0]
    at = (_atan_point_lo(silver_lo, digits + 5), _atan_point_hi(silver_hi, digits + 5))
    return {
        "sqrt2": s2,
        "sqrt3": s3,
        "pi": pp,
        "pi_sq": (pp[0] * pp[0], pp[1] * pp[1]),
        "acos_one_third": ac,
        "atan_silver": round_outward(*at, digits),
        "kappa2": pp,
        "kappa3": (4 * pp[0] / 3, 4 * pp[1] / 3),
        "kappa4": (pp[0] * pp[0] / 2, pp[1] * pp[1] / 2),
    }
