import math
from decimal import Decimal
from fractions import Fraction

import pytest

from ampamp.errors import InputError
from ampamp.utils.math import common_denominator, reduce_pi_multiple, to_fraction, wrap_angle


@pytest.mark.parametrize(
    "value, expected",
    [
        (3, Fraction(3)),
        (0.1, Fraction(1, 10)),
        ("27.5", Fraction(55, 2)),
        (" -29/2 ", Fraction(-29, 2)),
        (Decimal("1.25"), Fraction(5, 4)),
        (Fraction(2, 3), Fraction(2, 3)),
    ],
)
def test_to_fraction_converts_exactly(value, expected):
    assert to_fraction(value) == expected


@pytest.mark.parametrize("value", [True, "abc", float("nan"), float("inf"), Decimal("Infinity"), None])
def test_to_fraction_rejects_non_numbers(value):
    with pytest.raises(InputError):
        to_fraction(value)


def test_common_denominator():
    assert common_denominator([Fraction(1, 2), Fraction(3, 4), Fraction(5)]) == 4
    assert common_denominator([]) == 1


@pytest.mark.parametrize(
    "multiple, expected",
    [
        (Fraction(7, 2), Fraction(-1, 2)),
        (Fraction(1), Fraction(1)),
        (Fraction(-1), Fraction(1)),
        (Fraction(3), Fraction(1)),
        (Fraction(0), Fraction(0)),
        (Fraction(-1, 3), Fraction(-1, 3)),
    ],
)
def test_reduce_pi_multiple_lands_in_half_open_interval(multiple, expected):
    assert reduce_pi_multiple(multiple) == expected


def test_wrap_angle():
    assert wrap_angle(0.5) == 0.5
    assert math.isclose(abs(wrap_angle(3 * math.pi)), math.pi)
    assert math.isclose(wrap_angle(2 * math.pi + 0.25), 0.25)
