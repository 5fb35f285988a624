from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from ampamp.utils.math import reduce_pi_multiple, to_fraction


class PhaseScale:
    """Phase scale p_s in radians per cost unit.

    When the scale is known as an exact rational multiple of π (as produced by
    `ps = ±π / (C̄ - C)`), phases C·p_s are reduced modulo 2π in exact arithmetic before the
    conversion to float. Large costs times small scales then keep full double precision.

    Example:
        >>> ps = PhaseScale.from_pi_multiple(Fraction(2, 51))  # π / 25.5
        >>> round(float(ps), 6)
        0.1232
    """

    __slots__ = ("_radians", "_pi_multiple")

    # region Init

    def __init__(self, radians: float, pi_multiple: Fraction | None = None):
        self._radians = float(radians)
        self._pi_multiple = pi_multiple

    @classmethod
    def from_pi_multiple(cls, multiple: Union[Fraction, int, str]) -> PhaseScale:
        m = to_fraction(multiple)
        return cls(float(m) * math.pi, m)

    @classmethod
    def of(cls, value: Union[PhaseScale, float, int]) -> PhaseScale:
        """Coerce a plain radian value (or an existing scale) to a `PhaseScale`."""
        if isinstance(value, PhaseScale):
            return value
        return cls(float(value))

    # endregion

    # region Properties

    @property
    def radians(self) -> float:
        return self._radians

    @property
    def pi_multiple(self) -> Fraction | None:
        return self._pi_multiple

    @property
    def is_exact(self) -> bool:
        return self._pi_multiple is not None

    # endregion

    # region Main

    def phase(self, cost: Fraction | float) -> float:
        """Return C·p_s reduced into [-π, π]."""
        if self._pi_multiple is not None and not isinstance(cost, float):
            return float(reduce_pi_multiple(Fraction(cost) * self._pi_multiple)) * math.pi
        return math.remainder(float(cost) * self._radians, math.tau)

    def phasors(self, costs: Iterable[Fraction | float]) -> np.ndarray:
        """Return the complex array e^{i·C_j·p_s} for every cost in $costs."""
        return np.exp(1j * np.array([self.phase(c) for c in costs], dtype=np.float64))

    def scaled(self, factor: Union[Fraction, int]) -> PhaseScale:
        """Return this scale multiplied by an exact $factor."""
        f = Fraction(factor)
        if self._pi_multiple is not None:
            return PhaseScale.from_pi_multiple(self._pi_multiple * f)
        return PhaseScale(self._radians * float(f))

    def negated(self) -> PhaseScale:
        return self.scaled(-1)

    # endregion

    # region Magic

    def __float__(self) -> float:
        return self._radians

    def __str__(self) -> str:
        if self._pi_multiple is not None:
            return f"{self._pi_multiple}·π"
        return f"{self._radians!r}"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(radians={self._radians!r}, pi_multiple={self._pi_multiple!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseScale):
            return False
        return self._radians == other._radians and self._pi_multiple == other._pi_multiple

    def __hash__(self) -> int:
        return hash((self._radians, self._pi_multiple))

    # endregion
