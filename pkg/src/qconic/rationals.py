"""Exact rational scalars and small number-theoretic helpers.

The canonical scalar type is ``gmpy2.mpq`` (exported as ``QQ``): an
arbitrary-precision rational kept in lowest terms with a positive
denominator.  ``fractions.Fraction`` is used as a drop-in fallback when
gmpy2 is unavailable.  Rationals serialize as ``"p/q"`` (just ``"p"``
when the denominator is one), which is exactly ``str()`` of either type.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as QQ  # type: ignore[attr-defined]
    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    QQ = Fraction
    HAVE_GMPY2 = False

ZERO = QQ(0)
ONE = QQ(1)


def rational(value, den=None):
    """Coerce ints, strings like ``"3/4"``, Fractions or mpqs to ``QQ``."""
    if den is not None:
        return QQ(value, den)
    if isinstance(value, str):
        return QQ(value.strip())
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("refusing to build an exact rational from a float")
    return QQ(value)


def format_rational(value) -> str:
    """Serialize as ``p/q`` (or ``p`` when the denominator is 1)."""
    return str(QQ(value))


def parse_rational(text: str):
    """Inverse of :func:`format_rational`."""
    try:
        return QQ(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def is_integer(q) -> bool:
    return QQ(q).denominator == 1


def is_square(q) -> bool:
    """Exact test whether a rational is the square of a rational."""
    q = QQ(q)
    if q < 0:
        return False
    n, d = int(q.numerator), int(q.denominator)
    rn, rd = math.isqrt(n), math.isqrt(d)
    return rn * rn == n and rd * rd == d


def rational_sqrt_exact(q):
    """Square root of a rational known to be a perfect square."""
    q = QQ(q)
    n, d = int(q.numerator), int(q.denominator)
    return QQ(math.isqrt(n), math.isqrt(d))


def sqrt_upper(q, scale: int = 1 << 64):
    """A rational r with r >= sqrt(q), within 1/scale of the true value."""
    q = QQ(q)
    if q < 0:
        raise ValueError("negative input")
    if q == 0:
        return ZERO
    n, d = int(q.numerator), int(q.denominator)
    # isqrt(n*d*scale^2) over- then round up: floor(sqrt(nd)*s) + 1 >= sqrt(nd)*s
    s = math.isqrt(n * d * scale * scale) + 1
    return QQ(s, d * scale)


def sqrt_lower(q, scale: int = 1 << 64):
    """A rational r with 0 <= r <= sqrt(q)."""
    q = QQ(q)
    if q < 0:
        raise ValueError("negative input")
    if q == 0:
        return ZERO
    n, d = int(q.numerator), int(q.denominator)
    s = math.isqrt(n * d * scale * scale)
    return QQ(s, d * scale)


def simplest_in_interval(lo, hi):
    """The rational with smallest denominator in the closed interval [lo, hi].

    Stern-Brocot / continued-fraction descent; ties on denominator are
    broken toward the smaller numerator magnitude, which keeps the result
    deterministic.
    """
    lo, hi = QQ(lo), QQ(hi)
    if lo > hi:
        raise ValueError("empty interval")
    if lo == hi:
        return lo
    if lo <= 0 <= hi:
        return ZERO
    if hi < 0:
        return -simplest_in_interval(-hi, -lo)
    # now 0 < lo < hi
    fl = lo.numerator // lo.denominator
    if fl == hi.numerator // hi.denominator and lo.denominator != 1:
        frac = simplest_in_interval(QQ(1) / (hi - fl), QQ(1) / (lo - fl))
        return QQ(fl) + QQ(1) / frac
    return QQ(fl if lo.denominator == 1 else fl + 1)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def clear_denominators(values):
    """Scale a sequence of rationals to coprime integers (as ints).

    Returns ``(ints, multiplier)`` with ``ints[i] == values[i] * multiplier``.
    All-zero input returns zeros with multiplier 1.
    """
    vals = [QQ(v) for v in values]
    mult = lcm_all(int(v.denominator) for v in vals) if vals else 1
    ints = [int(v * mult) for v in vals]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    if g > 1:
        ints = [n // g for n in ints]
        mult = QQ(mult, g)
    return ints, QQ(mult)
