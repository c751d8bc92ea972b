from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genbinom.exact import (
    InexactDivisionError,
    as_int,
    binomial,
    exact_div,
    factorial,
    lowering_factorial,
    raising_factorial,
)


def _iterated_product(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (20, 2432902008176640000)])
def test_factorial(n, expected):
    assert factorial(n) == expected
    assert _iterated_product(n) == expected


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize(
    "a, b, expected",
    [(5, 2, 10), (3, -1, 0), (-1, -1, 0), (-3, 2, 0), (4, 5, 0), (0, 0, 1)],
)
def test_binomial_convention(a, b, expected):
    assert binomial(a, b) == expected


@pytest.mark.parametrize("a, k, expected", [(2, 3, 24), (-2, 3, 0), (7, 0, 1)])
def test_raising_factorial(a, k, expected):
    assert raising_factorial(a, k) == expected


def test_raising_factorial_rational():
    assert raising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert raising_factorial(Fraction(1, 3), 0) == 1


@pytest.mark.parametrize("a, k, expected", [(5, 2, 20), (3, 0, 1), (2, 4, 0)])
def test_lowering_factorial(a, k, expected):
    assert lowering_factorial(a, k) == expected


def test_exact_div():
    assert exact_div(45, 5) == 9
    assert exact_div(-12, 4) == -3
    with pytest.raises(InexactDivisionError):
        exact_div(7, 2)
    with pytest.raises(InexactDivisionError):
        as_int(Fraction(1, 3))
    assert as_int(Fraction(6, 3)) == 2


small = st.integers(min_value=0, max_value=60)


@given(small, small)
def test_binomial_symmetry(a, b):
    if b <= a:
        assert binomial(a, b) == binomial(a, a - b)


@given(small, small)
def test_binomial_is_falling_over_factorial(a, b):
    if b <= a:
        assert binomial(a, b) == exact_div(lowering_factorial(a, b), factorial(b))


@given(st.integers(min_value=-30, max_value=30), st.integers(min_value=0, max_value=15))
def test_raising_equals_shifted_lowering(a, k):
    assert raising_factorial(a, k) == lowering_factorial(a + k - 1, k)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=-3, max_value=63))
def test_pascal(a, b):
    assert binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1)
