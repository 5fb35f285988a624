from __future__ import annotations

from fractions import Fraction
from typing import Callable, Protocol, Sequence, Union, runtime_checkable

import numpy as np

from ampamp.domain.cost.weight_set import WeightSet
from ampamp.errors import InputError
from ampamp.utils.bits import bitstring_to_bits, bits_from_index, invert_bits
from ampamp.utils.math import to_fraction

Bits = Union[str, Sequence[int]]

# Largest |Σ scaled weights| that the vectorized int64 enumeration accepts
_INT64_SAFE_BOUND = 1 << 62


@runtime_checkable
class CostFunction(Protocol):
    """Anything that maps an N-bit string Z to a cost value C(Z)."""

    @property
    def n_qubits(self) -> int: ...

    def evaluate(self, bits: Sequence[int]) -> Fraction | float: ...


def _as_bits(z: Bits, n_qubits: int, caller: str) -> tuple[int, ...]:
    bits = bitstring_to_bits(z) if isinstance(z, str) else tuple(int(b) for b in z)

    # Check: length must match the qubit count
    if len(bits) != n_qubits:
        raise InputError(f"Cannot call `{caller}` because $z has length {len(bits)} but the cost function has N={n_qubits} qubits")
    if any(b not in (0, 1) for b in bits):
        raise InputError(f"Cannot call `{caller}` because $z ('{z}') contains values other than 0/1")
    return bits


class LinearCostFunction:
    """C(Z) = Σ W_i·z_i over a `WeightSet`."""

    __slots__ = ("_weight_set",)

    def __init__(self, weight_set: WeightSet):
        self._weight_set = weight_set

    # region Properties

    @property
    def weight_set(self) -> WeightSet:
        return self._weight_set

    @property
    def n_qubits(self) -> int:
        return self._weight_set.n_qubits

    # endregion

    # region Main

    def evaluate(self, bits: Sequence[int]) -> Fraction:
        return evaluate_linear(self._weight_set, bits)

    def evaluate_index(self, index: int) -> Fraction:
        return self.evaluate(bits_from_index(index, self.n_qubits))

    def evaluate_all_scaled(self) -> tuple[np.ndarray, int] | None:
        """Evaluate every basis index at once in integer-scaled form.

        Returns:
            ($costs, $denominator) with C(index) = costs[index] / denominator, or None when
            the scaled sums would not fit into int64 exactly.
        """
        scaled, denominator = self._weight_set.integer_scaled()
        if sum(abs(w) for w in scaled) >= _INT64_SAFE_BOUND:
            return None

        n = self.n_qubits
        indices = np.arange(1 << n, dtype=np.int64)
        costs = np.zeros(1 << n, dtype=np.int64)
        for q, w in enumerate(scaled):
            if w != 0:
                costs += ((indices >> q) & 1) * w
        return costs, denominator

    # endregion

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._weight_set!r})"


class CallableCostFunction:
    """Adapter turning a plain function of the bit tuple into a `CostFunction`.

    Non-linear (and non-integer) cost functions enter the brute-force path through this class.
    """

    __slots__ = ("_fn", "_n_qubits")

    def __init__(self, fn: Callable[[tuple[int, ...]], object], n_qubits: int):
        # Check: need at least one qubit
        if n_qubits < 1:
            raise InputError(f"Cannot call `CallableCostFunction.__init__` because $n_qubits ({n_qubits}) is not >= 1")
        self._fn = fn
        self._n_qubits = n_qubits

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    def evaluate(self, bits: Sequence[int]) -> Fraction | float:
        value = self._fn(tuple(bits))
        if isinstance(value, float):
            return value
        return to_fraction(value)

    def evaluate_index(self, index: int) -> Fraction | float:
        return self.evaluate(bits_from_index(index, self._n_qubits))


def evaluate_linear(w: WeightSet, z: Bits) -> Fraction:
    """Return Σ W_i·z_i exactly.

    Args:
        w: The weights.
        z: Bitstring (leftmost character = z_1) or sequence of 0/1 of length N.

    Raises:
        InputError: If the length of $z differs from N.
    """
    bits = _as_bits(z, w.n_qubits, "evaluate_linear")
    return sum((wi for wi, zi in zip(w.weights, bits) if zi), Fraction(0))


def mean_cost_from_inverse_pair(w: WeightSet, z: Bits) -> Fraction:
    """Return (C(Z) + C(¬Z)) / 2, which equals W_sum / 2 for every Z."""
    bits = _as_bits(z, w.n_qubits, "mean_cost_from_inverse_pair")
    return (evaluate_linear(w, bits) + evaluate_linear(w, invert_bits(bits))) / 2
