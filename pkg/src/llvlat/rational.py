"""Exact rational helpers: canonical "p/q" rendering, square and n-th root tests.

Everything in the toolkit is a ``fractions.Fraction``; no floating point is
used anywhere.  Perfect-power tests go through ``math.isqrt`` style integer
root extraction so they are exact for arbitrary magnitudes.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import ParseError

Q = Fraction


def fmt_q(x: Fraction) -> str:
    """Render a rational canonically: "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_q(text: str) -> Fraction:
    """Parse "p/q" or "p" (integers only, optional sign)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    return isqrt(n) ** 2 == n


def sqrt_rational(x) -> Fraction | None:
    """Exact square root of a rational, or None if x is not a rational square."""
    x = Fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def _iroot(n: int, k: int) -> int | None:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return n
    lo, hi = 1, 1 << ((n.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < n:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == n else None


def nth_root_rational(x, k: int) -> Fraction | None:
    """Exact rational k-th root of x, or None.

    For even k the non-negative root is returned; negative x has no root.
    For odd k the sign is carried through.
    """
    x = Fraction(x)
    if k <= 0:
        raise ValueError("k must be positive")
    sign = 1
    if x < 0:
        if k % 2 == 0:
            return None
        sign, x = -1, -x
    rp = _iroot(x.numerator, k)
    rq = _iroot(x.denominator, k)
    if rp is None or rq is None:
        return None
    return sign * Fraction(rp, rq)
