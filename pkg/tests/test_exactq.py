from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lensknot.errors import InvalidInputError
from lensknot.exactq import divide, egcd, format_rat, frac_center, parse_rat, rat

rationals = st.fractions(
    max_numerator=10**12, max_denominator=10**6
)


def test_arithmetic_examples():
    assert Fraction(1, 2) + Fraction(-1, 2) == Fraction(0, 1)
    assert Fraction(3, 4) + Fraction(-1, 4) == Fraction(1, 2)
    assert Fraction(-1, 6) * Fraction(3, 1) == Fraction(-1, 2)


def test_divide():
    assert divide(Fraction(1, 2), Fraction(3, 4)) == Fraction(2, 3)
    with pytest.raises(InvalidInputError):
        divide(Fraction(1), Fraction(0))


def test_rat_constructor():
    assert rat(6, 4) == Fraction(3, 2)
    with pytest.raises(InvalidInputError):
        rat(1, 0)


@given(rationals, rationals)
def test_add_sub_round_trip(a, b):
    assert a + b - b == a


@given(rationals, rationals)
def test_reduced_form_after_ops(a, b):
    from math import gcd

    for x in (a + b, a - b, a * b, -a):
        assert x.denominator > 0
        assert gcd(abs(x.numerator), x.denominator) == 1


@given(rationals, rationals)
def test_compare_total_order(a, b):
    assert (a < b) == (b > a)
    assert (a <= b or b <= a)


def test_egcd_examples():
    g, x, y = egcd(4, 2)
    assert g == 2 and 4 * x + 2 * y == 2
    g, x, y = egcd(5, 3)
    assert g == 1 and 5 * x + 3 * y == 1
    g, x, y = egcd(12, 0)
    assert g == 12 and 12 * x == 12


def test_egcd_both_zero():
    with pytest.raises(InvalidInputError):
        egcd(0, 0)


@given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
def test_egcd_bezout(a, b):
    if a == 0 and b == 0:
        return
    from math import gcd

    g, x, y = egcd(a, b)
    assert g == gcd(a, b) >= 1
    assert a * x + b * y == g


def test_frac_center_examples():
    assert frac_center(Fraction(1, 2)) == Fraction(-1, 2)
    assert frac_center(Fraction(3, 4)) == Fraction(-1, 4)
    assert frac_center(Fraction(-7, 3)) == Fraction(-1, 3)


@given(rationals)
def test_frac_center_properties(a):
    r = frac_center(a)
    assert Fraction(-1, 2) <= r < Fraction(1, 2)
    assert (a - r).denominator == 1
    assert frac_center(r) == r


def test_serialization_round_trip():
    assert format_rat(Fraction(-1, 4)) == "-1/4"
    assert format_rat(Fraction(0)) == "0/1"
    assert format_rat(Fraction(3, 4)) == "3/4"
    assert parse_rat("-1/4") == Fraction(-1, 4)
    assert parse_rat("3") == Fraction(3, 1)
    assert parse_rat(" 0/1 ") == 0


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "1/2/3"])
def test_parse_rejects(bad):
    with pytest.raises(InvalidInputError):
        parse_rat(bad)


@given(rationals)
def test_format_parse_inverse(a):
    assert parse_rat(format_rat(a)) == a
