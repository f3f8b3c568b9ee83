from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from designsieve.intervals import Interval


def iv(lo, hi):
    return Interval(Fraction(lo), Fraction(hi))


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=1000
)


def intervals():
    return st.tuples(rationals, rationals).map(
        lambda p: Interval(min(p), max(p))
    )


def test_point_and_width():
    p = Interval.point(3)
    assert p.width == 0
    assert p.midpoint == 3
    assert p.contains(3)


def test_contains_integer_and_unique():
    assert iv("1/2", "3/2").contains_integer()
    assert iv("1/2", "3/2").unique_integer() == 1
    assert iv("1/4", "3/4").unique_integer() is None
    assert not iv("1/4", "3/4").contains_integer()
    assert iv("1/2", "7/2").unique_integer() is None  # two integers inside


def test_arithmetic():
    a = iv(1, 2)
    b = iv(-3, 4)
    assert (a + b) == iv(-2, 6)
    assert (a - b) == iv(-3, 5)
    assert (a * b) == iv(-6, 8)
    assert a.square() == iv(1, 4)
    assert iv(-2, 1).square() == iv(0, 4)
    assert iv(-2, 1).abs() == iv(0, 2)


def test_division_by_zero_straddling_raises():
    with pytest.raises(ZeroDivisionError):
        iv(1, 2) / iv(-1, 1)
    with pytest.raises(ZeroDivisionError):
        iv(-1, 1).reciprocal()


def test_certain_comparisons():
    assert iv(0, 1).certainly_lt(iv(2, 3))
    assert not iv(0, 2).certainly_lt(iv(1, 3))
    assert iv(2, 3).certainly_gt(iv(0, 1))


@given(intervals(), intervals(), rationals, rationals)
def test_ops_preserve_containment(a, b, x, y):
    x = min(max(x, a.lo), a.hi)
    y = min(max(y, b.lo), b.hi)
    assert (a + b).contains(x + y)
    assert (a - b).contains(x - y)
    assert (a * b).contains(x * y)
    assert a.square().contains(x * x)
    assert a.abs().contains(abs(x))
    if not b.contains_zero():
        assert (a / b).contains(Fraction(x) / y)
