"""Directed-rounding building blocks for outward-rounded interval endpoints.

Strategy: compute each endpoint with ordinary IEEE-754 double arithmetic,
decide via an error-free transformation whether the result is exact, and
when it is not, step one unit in the last place in the outward direction.
This avoids global rounding-mode state, costs at most 1 ulp of slack per
endpoint, and returns exact results exactly (e.g. 1 + 2 == 3, sqrt(4) == 2).

Two facts make this rigorous:

* two_sum / two_product return the floating-point result together with its
  *exact* rounding error, so the sign of the error tells on which side of
  the true value the rounded result lies.
* division and square root are correctly rounded by IEEE 754, so whenever
  the result is inexact the true value is strictly within 1 ulp.

The product error term is unreliable when the product underflows to the
subnormal range or the Dekker split overflows; both cases are treated as
inexact, which only ever widens the interval.
"""

import math
import sys

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker split constant for binary64
_MIN_NORMAL = sys.float_info.min


def next_down(x: float) -> float:
    return math.nextafter(x, -math.inf)


def next_up(x: float) -> float:
    return math.nextafter(x, math.inf)


def two_sum(a: float, b: float):
    """Return (s, e) with s = fl(a + b) and a + b = s + e exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def two_product(a: float, b: float):
    """Return (p, e) with p = fl(a * b) and a * b = p + e exactly.

    e is NaN when the split overflows; callers must treat that as inexact.
    """
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    d = _SPLITTER * b
    bh = d - (d - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def add_down(a: float, b: float) -> float:
    s, e = two_sum(a, b)
    if e < 0.0:
        return next_down(s)
    return s


def add_up(a: float, b: float) -> float:
    s, e = two_sum(a, b)
    if e > 0.0:
        return next_up(s)
    return s


def sub_down(a: float, b: float) -> float:
    return add_down(a, -b)


def sub_up(a: float, b: float) -> float:
    return add_up(a, -b)


def _product_unreliable(a: float, b: float, p: float, e: float) -> bool:
    # NaN error term: the Dekker split overflowed.  Product in or below the
    # subnormal range with nonzero factors: the error term may itself have
    # been rounded, so the exactness test cannot be trusted.
    return e != e or (abs(p) < _MIN_NORMAL and a != 0.0 and b != 0.0)


def mul_down(a: float, b: float) -> float:
    p, e = two_product(a, b)
    if math.isinf(p):
        return p
    if _product_unreliable(a, b, p, e) or e < 0.0:
        return next_down(p)
    return p


def mul_up(a: float, b: float) -> float:
    p, e = two_product(a, b)
    if math.isinf(p):
        return p
    if _product_unreliable(a, b, p, e) or e > 0.0:
        return next_up(p)
    return p


def _div_is_exact(q: float, b: float, a: float) -> bool:
    p, e = two_product(q, b)
    return not _product_unreliable(q, b, p, e) and p == a and e == 0.0


def div_down(a: float, b: float) -> float:
    q = a / b
    if math.isinf(q) or _div_is_exact(q, b, a):
        return q
    return next_down(q)


def div_up(a: float, b: float) -> float:
    q = a / b
    if math.isinf(q) or _div_is_exact(q, b, a):
        return q
    return next_up(q)


def _sqrt_is_exact(r: float, x: float) -> bool:
    p, e = two_product(r, r)
    return not _product_unreliable(r, r, p, e) and p == x and e == 0.0


def sqrt_down(x: float) -> float:
    r = math.sqrt(x)
    if _sqrt_is_exact(r, x):
        return r
    return next_down(r)


def sqrt_up(x: float) -> float:
    r = math.sqrt(x)
    if _sqrt_is_exact(r, x):
        return r
    return next_up(r)
