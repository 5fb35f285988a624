from __future__ import annotations

from typing import Iterable

import numpy as np

from ampamp.errors import InputError


class CollectiveState:
    """Quantum state restricted to the collective-state subspace.

    Every basis state of class j carries the same amplitude α_j, so the whole 2^N-dimensional
    state is the D complex numbers $amps plus the class sizes $counts. Instances are
    immutable: the amplitude array is read-only.

    Attributes:
        amps (np.ndarray): α_j per class (complex128, read-only).
        counts (tuple[int, ...]): N_j per class.
        n_qubits (int): N.
    """

    __slots__ = ("_amps", "_counts", "_n_qubits", "_weights")

    # region Init

    def __init__(self, amps: Iterable[complex] | np.ndarray, counts: Iterable[int], n_qubits: int):
        amplitudes = np.array(amps, dtype=np.complex128)
        cnts = tuple(int(c) for c in counts)

        # Check: one amplitude per class
        if amplitudes.ndim != 1 or len(amplitudes) != len(cnts):
            raise InputError(f"Cannot call `CollectiveState.__init__` because $amps has shape {amplitudes.shape} but there are {len(cnts)} classes")

        amplitudes.flags.writeable = False
        self._amps = amplitudes
        self._counts = cnts
        self._n_qubits = n_qubits
        self._weights: np.ndarray | None = None

    # endregion

    # region Properties

    @property
    def amps(self) -> np.ndarray:
        return self._amps

    @property
    def counts(self) -> tuple[int, ...]:
        return self._counts

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def dimension(self) -> int:
        return len(self._counts)

    @property
    def weights(self) -> np.ndarray:
        """N_j / 2^N per class."""
        if self._weights is None:
            weights = np.array(self._counts, dtype=np.float64) / float(1 << self._n_qubits)
            weights.flags.writeable = False
            self._weights = weights
        return self._weights

    # endregion

    # region Convenience

    def class_probabilities(self) -> np.ndarray:
        """N_j·|α_j|² per class."""
        return np.array(self._counts, dtype=np.float64) * np.abs(self._amps) ** 2

    def norm(self) -> float:
        """Σ N_j·|α_j|² (1 for a valid state)."""
        return float(self.class_probabilities().sum())

    def with_amplitudes(self, amps: np.ndarray) -> CollectiveState:
        """Return a state over the same classes with new amplitudes."""
        state = CollectiveState(amps, self._counts, self._n_qubits)
        state._weights = self._weights
        return state

    # endregion

    # region Magic

    def __len__(self) -> int:
        return len(self._counts)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(N={self._n_qubits}, D={self.dimension}, norm={self.norm():.12f})"

    # endregion
