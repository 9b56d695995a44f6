"""Scalar layer: strict text form and the scalar falling factorial."""

from fractions import Fraction

import pytest
from hypothesis import given

from boole_kernel import falling_factorial_rat, format_rat, parse_rat
from conftest import small_fractions


def test_parse_plain_and_fraction():
    assert parse_rat("3") == Fraction(3)
    assert parse_rat("-7/2") == Fraction(-7, 2)
    assert parse_rat("+4/6") == Fraction(2, 3)


@pytest.mark.parametrize("bad", ["", "1.5", "1/2/3", "a", " 1", "1/ 2", "2/0", "1e3"])
def test_parse_rejects_non_literals(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_format_round_trip():
    for q in (Fraction(1, 2), Fraction(-3), Fraction(0), Fraction(22, 7)):
        assert parse_rat(format_rat(q)) == q
    assert format_rat(Fraction(5)) == "5"
    assert format_rat(Fraction(-1, 2)) == "-1/2"


def test_falling_factorial_values():
    assert falling_factorial_rat(5, 0) == 1
    assert falling_factorial_rat(5, 3) == 60
    assert falling_factorial_rat(Fraction(1, 2), 2) == Fraction(-1, 4)
    assert falling_factorial_rat(3, -1) == Fraction(1, 4)
    with pytest.raises(ValueError):
        falling_factorial_rat(3, -2)


@given(small_fractions, small_fractions, small_fractions)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if a != 0:
        assert (a * b) / a == b
