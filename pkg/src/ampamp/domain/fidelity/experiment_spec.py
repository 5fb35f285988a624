from __future__ import annotations

import math
from enum import IntEnum
from typing import Iterable, Union

import numpy as np

from ampamp.errors import InputError

DEFAULT_GRID_POINTS = 100


class ExperimentKind(IntEnum):
    """The three first-iteration hardware experiments."""

    COST_VARY_PS = 1  # W1 oracle with π/N′ scaling, vary p_s, θ = π
    COST_VARY_THETA = 2  # W1 oracle with π/N′ scaling, p_s = 1, vary θ
    GROVER_VARY_THETA = 3  # Grover oracle on |1…1⟩ with φ = π, vary θ

    @classmethod
    def parse(cls, kind: Union[ExperimentKind, int, str]) -> ExperimentKind:
        try:
            return cls(int(kind))
        except ValueError:
            raise InputError(f"Experiment kind '{kind}' not found. Available kinds: {[k.value for k in cls]}") from None


class ExperimentSpec:
    """One experiment: kind, qubit count and the grid of the varied parameter.

    Fixed parameters: experiment 1 runs θ = π and varies p_s; experiment 2 runs p_s = 1 and
    varies θ; experiment 3 marks |1…1⟩ with φ = π (N_m = 1) and varies θ. The cost oracle of
    experiments 1 and 2 applies i·π·p_s/N′ on qubit i.

    Example:
        >>> spec = ExperimentSpec.default(3, 2)
        >>> len(spec.grid), spec.varied
        (100, 'theta')
    """

    __slots__ = ("_kind", "_n_qubits", "_grid")

    FIXED_THETA: float = math.pi
    FIXED_PS: float = 1.0
    FIXED_PHI: float = math.pi
    N_MARKED: int = 1

    # region Init

    def __init__(self, kind: Union[ExperimentKind, int], n_qubits: int, grid: Iterable[float]):
        """Raises `InputError` for an unknown kind, $n_qubits < 2 or an empty grid."""
        self._kind = ExperimentKind.parse(kind)

        # Check: experiments need at least two qubits
        if n_qubits < 2:
            raise InputError(f"Cannot call `ExperimentSpec.__init__` because $n_qubits ({n_qubits}) is not >= 2")
        self._n_qubits = n_qubits

        values = np.asarray([float(g) for g in grid], dtype=np.float64)
        # Check: grid must have at least one point
        if values.size == 0:
            raise InputError("Cannot call `ExperimentSpec.__init__` because $grid is empty")
        values.flags.writeable = False
        self._grid = values

    @classmethod
    def default(cls, kind: Union[ExperimentKind, int], n_qubits: int, grid_points: int = DEFAULT_GRID_POINTS) -> ExperimentSpec:
        """Spec with $grid_points evenly spaced values over [0, 2π] for the varied parameter."""
        if grid_points < 1:
            raise InputError(f"Cannot call `ExperimentSpec.default` because $grid_points ({grid_points}) is not >= 1")
        return cls(kind, n_qubits, np.linspace(0.0, 2 * math.pi, grid_points))

    # endregion

    # region Properties

    @property
    def kind(self) -> ExperimentKind:
        return self._kind

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    @property
    def grid(self) -> np.ndarray:
        return self._grid

    @property
    def varied(self) -> str:
        """Name of the varied parameter: "ps" or "theta"."""
        return "ps" if self._kind is ExperimentKind.COST_VARY_PS else "theta"

    @property
    def marked_bitstring(self) -> str | None:
        """All-ones marked state of experiment 3."""
        return "1" * self._n_qubits if self._kind is ExperimentKind.GROVER_VARY_THETA else None

    # endregion

    def grid_index(self, parameter: float) -> int:
        """Position of $parameter in the grid (compared with `np.isclose`).

        Raises:
            InputError: If $parameter is not a grid value.
        """
        hits = np.nonzero(np.isclose(self._grid, parameter, rtol=1e-12, atol=1e-12))[0]
        if hits.size == 0:
            raise InputError(f"Parameter {parameter!r} is not on the grid of {self}")
        return int(hits[0])

    # region Magic

    def __str__(self) -> str:
        return f"Experiment {int(self._kind)} (N={self._n_qubits}, {len(self._grid)} {self.varied} value(s))"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(kind={self._kind!r}, n_qubits={self._n_qubits}, grid={self._grid.tolist()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExperimentSpec):
            return False
        return self._kind == other._kind and self._n_qubits == other._n_qubits and np.array_equal(self._grid, other._grid)

    # endregion
