from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Union

from ampamp.errors import InputError

ExactNumber = Union[int, Fraction, Decimal, str]


def to_fraction(value: ExactNumber | float) -> Fraction:
    """
    Convert a number to an exact `Fraction`.

    Integers, fractions and decimal strings convert exactly. Floats are converted through
    their shortest decimal representation, so `0.1` becomes `1/10` rather than the binary
    expansion of the double.

    Args:
        value: The number to convert.

    Returns:
        The exact rational value.

    Raises:
        InputError: If $value is not numeric (booleans are rejected too).
    """
    # Check: bool is an int subclass but never a meaningful weight
    if isinstance(value, bool):
        raise InputError(f"Cannot call `to_fraction` because $value ('{value}') is a bool, not a number")

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, float):
        if not math.isfinite(value):
            raise InputError(f"Cannot call `to_fraction` because $value ('{value}') is not finite")
        return Fraction(repr(value))

    if isinstance(value, Decimal):
        if not value.is_finite():
            raise InputError(f"Cannot call `to_fraction` because $value ('{value}') is not finite")
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(Decimal(value.strip()))
        except (InvalidOperation, ValueError, OverflowError):
            # Fraction also parses "p/q"
            try:
                return Fraction(value.strip())
            except ValueError:
                raise InputError(f"Cannot call `to_fraction` because $value ('{value}') is not a numeric string") from None

    raise InputError(f"Cannot call `to_fraction` because $value ('{value}') of type {type(value).__name__} is not numeric")


def common_denominator(values: Iterable[Fraction]) -> int:
    """
    Return the least common multiple of the denominators of $values (1 for an empty input).

    Examples:
        >>> common_denominator([Fraction(1, 2), Fraction(3, 4), Fraction(5)])
        4
    """
    result = 1
    for v in values:
        result = math.lcm(result, v.denominator)
    return result


def reduce_pi_multiple(multiple: Fraction) -> Fraction:
    """
    Reduce an angle given as an exact multiple of π into the interval (-1, 1].

    Examples:
        >>> reduce_pi_multiple(Fraction(7, 2))
        Fraction(-1, 2)
        >>> reduce_pi_multiple(Fraction(1))
        Fraction(1, 1)
    """
    reduced = multiple % 2  # [0, 2)
    if reduced > 1:
        reduced -= 2
    return reduced


def wrap_angle(angle: float) -> float:
    """Wrap $angle (radians) into [-π, π]."""
    return math.remainder(angle, math.tau)
