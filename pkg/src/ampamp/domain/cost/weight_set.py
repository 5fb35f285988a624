from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ampamp.errors import InputError
from ampamp.utils.math import ExactNumber, common_denominator, to_fraction


class WeightSet:
    """Weights W_1..W_N of a linear cost function C(Z) = Σ W_i·z_i.

    Weights are stored as exact `Fraction`(s), so half-integer means and class binning stay exact.

    Attributes:
        weights (tuple[Fraction, ...]): The weights, W_1 first.
        n_qubits (int): N, the number of weights.
        w_sum (Fraction): Σ W_i.
        n_prime (int): N' = N(N+1)/2, the normalizer of the experiment-circuit phase gates.
        name (str | None): Optional label (e.g. "W2").
    """

    __slots__ = ("_weights", "_w_sum", "_name")

    # region Init

    def __init__(self, weights: Iterable[ExactNumber | float], name: str | None = None):
        """Initialize a weight set.

        Args:
            weights: Weights in qubit order; ints, fractions, decimals or decimal strings.
            name: Optional label.

        Raises:
            InputError: If $weights is empty or contains a non-numeric entry.
        """
        converted = tuple(to_fraction(w) for w in weights)

        # Check: at least one qubit
        if len(converted) == 0:
            raise InputError("Cannot call `WeightSet.__init__` because $weights is empty; a cost function needs N >= 1 weights")

        self._weights = converted
        self._w_sum = sum(converted, Fraction(0))
        self._name = name

    # endregion

    # region Properties

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return self._weights

    @property
    def n_qubits(self) -> int:
        return len(self._weights)

    @property
    def w_sum(self) -> Fraction:
        return self._w_sum

    @property
    def n_prime(self) -> int:
        n = self.n_qubits
        return n * (n + 1) // 2

    @property
    def name(self) -> str | None:
        return self._name

    # endregion

    # region Convenience

    def integer_scaled(self) -> tuple[tuple[int, ...], int]:
        """Return the weights scaled to integers together with the common denominator.

        Returns:
            tuple: ($scaled_weights, $denominator) with W_i = scaled_weights[i] / denominator.
        """
        denominator = common_denominator(self._weights)
        scaled = tuple(int(w * denominator) for w in self._weights)
        return scaled, denominator

    def is_integer(self) -> bool:
        return all(w.denominator == 1 for w in self._weights)

    # endregion

    # region Magic

    def __len__(self) -> int:
        return len(self._weights)

    def __str__(self) -> str:
        label = self._name or "WeightSet"
        return f"{label}(N={self.n_qubits}, w_sum={self._w_sum})"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(weights={[str(w) for w in self._weights]}, name={self._name!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightSet):
            return False
        return self._weights == other._weights

    def __hash__(self) -> int:
        return hash(self._weights)

    # endregion
