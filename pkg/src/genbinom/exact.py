"""Exact integer/rational primitives shared by every other module.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``, which is always stored in lowest terms with a positive
denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Fraction",
    "InexactDivisionError",
    "as_int",
    "binomial",
    "exact_div",
    "factorial",
    "lowering_factorial",
    "raising_factorial",
]


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, total over the integers.

    Returns 0 whenever ``b < 0``, ``a < 0`` or ``b > a``. The negative-upper
    case is deliberately zero, not the generalized binomial: every sum in
    this package is arranged so those terms carry a vanishing factor anyway.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def raising_factorial(a, k: int):
    """Pochhammer symbol ``a (a+1) ... (a+k-1)``; works for int and Fraction."""
    if k < 0:
        raise ValueError(f"raising factorial needs k >= 0, got {k}")
    out = 1
    for j in range(k):
        out *= a + j
    return out


def lowering_factorial(a, k: int):
    """Falling factorial ``a (a-1) ... (a-k+1)``."""
    if k < 0:
        raise ValueError(f"lowering factorial needs k >= 0, got {k}")
    out = 1
    for j in range(k):
        out *= a - j
    return out


def exact_div(a: int, b: int) -> int:
    """Integer quotient ``a / b``; raises if ``b`` does not divide ``a``."""
    q, rem = divmod(a, b)
    if rem:
        raise InexactDivisionError(f"{a} is not divisible by {b}")
    return q


def as_int(x: Rational) -> int:
    """Convert a rational that must be integral to ``int``."""
    x = Fraction(x)
    if x.denominator != 1:
        raise InexactDivisionError(f"{x} is not an integer")
    return x.numerator
