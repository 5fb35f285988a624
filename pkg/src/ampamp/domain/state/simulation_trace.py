from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ampamp.domain.state.oracle_spec import OracleSpec
from ampamp.errors import InputError


@dataclass(frozen=True)
class IterationRecord:
    """State bookkeeping after iteration k.

    Iteration 0 is the bare superposition |s⟩. For k >= 1 both stages of the iteration are kept:
    - post-oracle: $oracle_amplitudes and $oracle_mean_amp (the ᾱ the diffusion reflects about);
    - post-diffusion: $amplitudes, $class_probs and $mean_amp.
    """

    k: int
    class_probs: np.ndarray
    mean_amp: complex
    amplitudes: np.ndarray
    oracle_amplitudes: np.ndarray | None = None
    oracle_mean_amp: complex | None = None


class SimulationTrace:
    """Per-iteration records of one run from |s⟩ up to $k_max iterations."""

    __slots__ = ("_records", "_oracle", "_theta", "_k_max")

    # region Init

    def __init__(self, records: list[IterationRecord], oracle: OracleSpec, theta: float, k_max: int):
        # Check: records must cover k = 0..k_max in order
        if [r.k for r in records] != list(range(k_max + 1)):
            raise InputError(f"Cannot call `SimulationTrace.__init__` because $records do not cover k = 0..{k_max} in order")
        self._records = records
        self._oracle = oracle
        self._theta = float(theta)
        self._k_max = k_max

    # endregion

    # region Properties

    @property
    def records(self) -> list[IterationRecord]:
        return self._records

    @property
    def oracle(self) -> OracleSpec:
        return self._oracle

    @property
    def theta(self) -> float:
        return self._theta

    @property
    def k_max(self) -> int:
        return self._k_max

    # endregion

    # region Convenience

    def record(self, k: int) -> IterationRecord:
        # Check: k within the trace
        if not 0 <= k <= self._k_max:
            raise InputError(f"Cannot call `SimulationTrace.record` because $k ({k}) is outside [0, {self._k_max}]")
        return self._records[k]

    def curve(self, selector: Callable[[np.ndarray], float]) -> np.ndarray:
        """Selected probability at every k."""
        return np.array([selector(r.class_probs) for r in self._records], dtype=np.float64)

    # endregion

    # region Magic

    def __len__(self) -> int:
        return len(self._records)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(oracle={self._oracle}, theta={self._theta!r}, k_max={self._k_max})"

    # endregion
