from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.utils.math import ExactNumber, to_fraction


class TargetSelector:
    """Picks the classes whose probabilities are summed into one target probability.

    Use `single` for one class or `joint` for a cost value together with its inverse
    2·C̄ - c (counted once when c = C̄).
    """

    __slots__ = ("_indices", "_label")

    def __init__(self, indices: Sequence[int], label: str):
        self._indices = tuple(sorted(set(int(i) for i in indices)))
        self._label = label

    # region Factories

    @classmethod
    def single(cls, spectrum: CostSpectrum, c: ExactNumber) -> TargetSelector:
        """Select class $c only. Raises `DomainError` if $c is not in $spectrum."""
        value = to_fraction(c)
        return cls([spectrum.index_of(value)], f"C={value}")

    @classmethod
    def joint(cls, spectrum: CostSpectrum, c: ExactNumber) -> TargetSelector:
        """Select class $c and its inverse class 2·C̄ - c when that class exists.

        Raises:
            DomainError: If $c is not in $spectrum.
        """
        value = to_fraction(c)
        indices = [spectrum.index_of(value)]
        inverse: Fraction = spectrum.inverse_cost(value)
        if spectrum.contains(inverse):
            indices.append(spectrum.index_of(inverse))
        return cls(indices, f"C={value}|C={inverse}")

    @classmethod
    def class_index(cls, index: int, label: str | None = None) -> TargetSelector:
        return cls([index], label or f"class[{index}]")

    # endregion

    # region Properties

    @property
    def indices(self) -> tuple[int, ...]:
        return self._indices

    @property
    def label(self) -> str:
        return self._label

    # endregion

    def probability(self, class_probs: np.ndarray) -> float:
        """Sum of $class_probs over the selected classes."""
        return float(np.sum(class_probs[list(self._indices)]))

    def __call__(self, class_probs: np.ndarray) -> float:
        return self.probability(class_probs)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(indices={self._indices}, label={self._label!r})"
