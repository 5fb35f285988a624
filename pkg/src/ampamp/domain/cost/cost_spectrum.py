from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

import numpy as np

from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.errors import DomainError, InputError
from ampamp.utils.math import ExactNumber, to_fraction


class CostSpectrum:
    """Distinct cost values C_j with their multiplicities N_j over all 2^N bitstrings.

    This is the whole problem skeleton the collective-state simulator needs: class j holds
    the N_j basis states whose cost equals C_j. Values are exact and strictly increasing.

    Attributes:
        values (tuple[Fraction, ...]): C_1 < C_2 < ... < C_D.
        counts (tuple[int, ...]): N_1..N_D, all >= 1, summing to 2^N.
        n_qubits (int): N.
        c_bar (Fraction): (1/2^N)·Σ N_j·C_j.
        dimension (int): D, the number of classes.
    """

    __slots__ = ("_values", "_counts", "_n_qubits", "_c_bar", "_index")

    # region Init

    def __init__(self, values: Iterable[ExactNumber], counts: Iterable[int], n_qubits: int):
        """Initialize a spectrum and validate its invariants.

        Raises:
            InputError: If lengths differ, values are not strictly increasing, a count is < 1
                or the counts do not sum to 2^$n_qubits.
        """
        vals = tuple(to_fraction(v) for v in values)
        cnts = tuple(int(c) for c in counts)

        # Check: parallel arrays
        if len(vals) != len(cnts):
            raise InputError(f"Cannot call `CostSpectrum.__init__` because $values ({len(vals)}) and $counts ({len(cnts)}) differ in length")

        # Check: at least one class
        if len(vals) == 0:
            raise InputError("Cannot call `CostSpectrum.__init__` because the spectrum has no classes (D must be >= 1)")

        # Check: N >= 1
        if n_qubits < 1:
            raise InputError(f"Cannot call `CostSpectrum.__init__` because $n_qubits ({n_qubits}) is not >= 1")

        # Check: strictly increasing values
        for a, b in zip(vals, vals[1:]):
            if not a < b:
                raise InputError(f"Cannot call `CostSpectrum.__init__` because $values are not strictly increasing ({a} followed by {b})")

        # Check: positive counts
        bad = [c for c in cnts if c < 1]
        if bad:
            raise InputError(f"Cannot call `CostSpectrum.__init__` because $counts contains non-positive entries: {bad}")

        # Check: Σ N_j = 2^N
        total = sum(cnts)
        if total != (1 << n_qubits):
            raise InputError(f"Cannot call `CostSpectrum.__init__` because Σ $counts ({total}) != 2^{n_qubits} ({1 << n_qubits})")

        self._values = vals
        self._counts = cnts
        self._n_qubits = n_qubits
        self._c_bar = sum((v * c for v, c in zip(vals, cnts)), Fraction(0)) / (1 << n_qubits)
        self._index = {v: j for j, v in enumerate(vals)}

    @classmethod
    def from_mapping(cls, counts_by_value: Mapping[ExactNumber, int], n_qubits: int) -> CostSpectrum:
        """Build a spectrum from an unordered {C: N} mapping."""
        items = sorted((to_fraction(v), int(c)) for v, c in counts_by_value.items())
        return cls([v for v, _ in items], [c for _, c in items], n_qubits)

    @classmethod
    def grover(cls, n_qubits: int, n_marked: int) -> CostSpectrum:
        """Two-class spectrum of a Grover oracle: value 0 for |n⟩ (unmarked), value 1 for |m⟩ (marked).

        Raises:
            InputError: If not 1 <= $n_marked < 2^$n_qubits.
        """
        size = 1 << n_qubits
        # Check: there must be marked and unmarked states
        if not 1 <= n_marked < size:
            raise InputError(f"Cannot call `CostSpectrum.grover` because $n_marked ({n_marked}) is not in [1, 2^{n_qubits})")
        return cls([0, 1], [size - n_marked, n_marked], n_qubits)

    # endregion

    # region Properties

    @property
    def values(self) -> tuple[Fraction, ...]:
        return self._values

    @property
    def counts(self) -> tuple[int, ...]:
        return self._counts

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def c_bar(self) -> Fraction:
        return self._c_bar

    @property
    def dimension(self) -> int:
        return len(self._values)

    @property
    def min_value(self) -> Fraction:
        return self._values[0]

    @property
    def max_value(self) -> Fraction:
        return self._values[-1]

    # endregion

    # region Convenience

    def contains(self, c: ExactNumber) -> bool:
        return to_fraction(c) in self._index

    def index_of(self, c: ExactNumber) -> int:
        """Return the class index j of cost value $c.

        Raises:
            DomainError: If $c is not a value of this spectrum.
        """
        value = to_fraction(c)
        if value not in self._index:
            raise DomainError(f"Cannot call `CostSpectrum.index_of` because $c ('{value}') is not a cost value of this spectrum (range [{self.min_value}, {self.max_value}], D={self.dimension})")
        return self._index[value]

    def count_of(self, c: ExactNumber) -> int:
        """N_j of value $c, 0 when the value is not achievable."""
        j = self._index.get(to_fraction(c))
        return 0 if j is None else self._counts[j]

    def inverse_cost(self, c: ExactNumber) -> Fraction:
        return inverse_cost(self, c)

    def probability_weights(self) -> np.ndarray:
        """Return N_j / 2^N as a float array."""
        return np.array(self._counts, dtype=np.float64) / float(1 << self._n_qubits)

    def is_symmetric(self) -> bool:
        """True when {(C_j - C̄, N_j)} is invariant under negating the first component."""
        for v, c in zip(self._values, self._counts):
            if self.count_of(2 * self._c_bar - v) != c:
                return False
        return True

    def sigma_scaled(self, ps: Union[PhaseScale, float]) -> float:
        return sigma_scaled(self, ps)

    # endregion

    # region Magic

    def __len__(self) -> int:
        return len(self._values)

    def __str__(self) -> str:
        return f"CostSpectrum(N={self._n_qubits}, D={self.dimension}, C̄={self._c_bar}, range=[{self.min_value}, {self.max_value}])"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(values={[str(v) for v in self._values]}, counts={list(self._counts)}, n_qubits={self._n_qubits})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CostSpectrum):
            return False
        return self._n_qubits == other._n_qubits and self._values == other._values and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self._n_qubits, self._values, self._counts))

    # endregion


def inverse_cost(s: CostSpectrum, c: ExactNumber) -> Fraction:
    """Return 2·C̄ - c, the cost of the bitwise-inverse class of a linear cost function."""
    return 2 * s.c_bar - to_fraction(c)


def sigma_scaled(s: CostSpectrum, ps: Union[PhaseScale, float]) -> float:
    """Return the standard deviation of the scaled costs C_j·p_s over all 2^N bitstrings.

    The variance of the unscaled costs is computed exactly; only the final square root and
    the multiplication by |p_s| are floating point.
    """
    size = 1 << s.n_qubits
    variance = sum((c * (v - s.c_bar) ** 2 for v, c in zip(s.values, s.counts)), Fraction(0)) / size
    return abs(float(PhaseScale.of(ps))) * math.sqrt(variance)
