"""Directed-rounding primitives against exact rational arithmetic."""

import math
from fractions import Fraction

import numpy as np
import pytest

from rlcband.rounding import (
    add_down,
    add_up,
    div_down,
    div_up,
    mul_down,
    mul_up,
    next_down,
    next_up,
    sqrt_down,
    sqrt_up,
    sub_down,
    sub_up,
    two_product,
    two_sum,
)


def _random_values(n, seed):
    rng = np.random.default_rng(seed)
    mantissa = rng.uniform(-1e6, 1e6, n)
    exponent = rng.integers(-12, 13, n).astype(np.float64)
    return mantissa * 10.0**exponent


def test_two_sum_error_is_exact():
    a_vals = _random_values(20000, 1)
    b_vals = _random_values(20000, 2)
    for a, b in zip(a_vals, b_vals):
        s, e = two_sum(a, b)
        assert Fraction(s) + Fraction(e) == Fraction(a) + Fraction(b)


def test_two_product_error_is_exact():
    a_vals = _random_values(20000, 3)
    b_vals = _random_values(20000, 4)
    for a, b in zip(a_vals, b_vals):
        p, e = two_product(a, b)
        assert Fraction(p) + Fraction(e) == Fraction(a) * Fraction(b)


@pytest.mark.parametrize(
    "down,up,op,sign_aware",
    [
        (add_down, add_up, lambda a, b: Fraction(a) + Fraction(b), True),
        (sub_down, sub_up, lambda a, b: Fraction(a) - Fraction(b), True),
        (mul_down, mul_up, lambda a, b: Fraction(a) * Fraction(b), True),
        (div_down, div_up, lambda a, b: Fraction(a) / Fraction(b), False),
    ],
    ids=["add", "sub", "mul", "div"],
)
def test_directed_ops_bracket_exact(down, up, op, sign_aware):
    a_vals = _random_values(10000, 5)
    b_vals = _random_values(10000, 6)
    b_vals[b_vals == 0.0] = 1.0
    for a, b in zip(a_vals, b_vals):
        lo = down(a, b)
        hi = up(a, b)
        exact = op(a, b)
        assert Fraction(lo) <= exact <= Fraction(hi)
        if sign_aware:
            # error-sign-aware stepping never gives away a full ulp
            assert Fraction(next_up(lo)) > exact or Fraction(lo) == exact
            assert Fraction(next_down(hi)) < exact or Fraction(hi) == exact
        else:
            # blind 1-ulp stepping: bounds within two representable steps
            assert next_up(next_up(lo)) >= hi


def test_exact_operations_do_not_widen():
    assert add_down(1.0, 2.0) == 3.0 == add_up(1.0, 2.0)
    assert sub_down(5.0, 5.0) == 0.0 == sub_up(5.0, 5.0)
    assert mul_down(0.25, 8.0) == 2.0 == mul_up(0.25, 8.0)
    assert div_down(1.0, 4.0) == 0.25 == div_up(1.0, 4.0)
    assert sqrt_down(9.0) == 3.0 == sqrt_up(9.0)


def test_inexact_operations_step_outward():
    assert add_down(0.1, 0.2) < 0.1 + 0.2
    assert add_up(0.1, 0.2) == 0.1 + 0.2  # fl(0.1+0.2) rounds up, so it is the bound
    lo, hi = div_down(1.0, 3.0), div_up(1.0, 3.0)
    assert lo < hi
    assert Fraction(lo) < Fraction(1, 3) < Fraction(hi)
    assert sqrt_down(2.0) < math.sqrt(2.0) <= sqrt_up(2.0)


def test_sqrt_brackets_exact():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.0, 1e12, 20000):
        lo, hi = sqrt_down(x), sqrt_up(x)
        assert Fraction(lo) * Fraction(lo) <= Fraction(x) <= Fraction(hi) * Fraction(hi)
        # 1 ulp of blind outward slack on each side of the rounded root
        assert next_up(next_up(lo)) >= hi


def test_subnormal_products_stay_sound():
    tiny = 1e-200
    lo = mul_down(tiny, tiny)
    hi = mul_up(tiny, tiny)
    assert Fraction(lo) <= Fraction(tiny) * Fraction(tiny) <= Fraction(hi)
