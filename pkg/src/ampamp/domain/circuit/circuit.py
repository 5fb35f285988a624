from __future__ import annotations

from typing import Iterable

from ampamp.domain.circuit.gate import Gate
from ampamp.errors import InputError


class Circuit:
    """Ordered gate list over a fixed number of qubits.

    Attributes:
        width (int): Number of qubits.
        gates (tuple[Gate, ...]): Gates in application order.
    """

    __slots__ = ("_width", "_gates")

    def __init__(self, width: int, gates: Iterable[Gate] = ()):
        # Check: at least one qubit
        if width < 1:
            raise InputError(f"Cannot call `Circuit.__init__` because $width ({width}) is not >= 1")
        self._width = width
        self._gates: list[Gate] = []
        self.extend(gates)

    # region Properties

    @property
    def width(self) -> int:
        return self._width

    @property
    def gates(self) -> tuple[Gate, ...]:
        return tuple(self._gates)

    # endregion

    # region Building

    def append(self, gate: Gate) -> Circuit:
        """Append $gate and return self.

        Raises:
            InputError: If $gate touches a qubit outside the circuit.
        """
        # Check: qubit indices in range
        if max(gate.qubits) >= self._width:
            raise InputError(f"Cannot call `Circuit.append` because {gate} uses a qubit >= width ({self._width})")
        self._gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> Circuit:
        for gate in gates:
            self.append(gate)
        return self

    def compose(self, other: Circuit) -> Circuit:
        """New circuit applying self, then $other (widths must match)."""
        if other.width != self._width:
            raise InputError(f"Cannot call `Circuit.compose` because widths differ ({self._width} vs {other.width})")
        return Circuit(self._width, [*self._gates, *other._gates])

    def inverse(self) -> Circuit:
        return Circuit(self._width, [g.inverse() for g in reversed(self._gates)])

    # endregion

    # region Metrics

    def depth(self) -> int:
        """Parallel layers: each gate enters the first layer after all its qubits are free."""
        frontier = [0] * self._width
        for gate in self._gates:
            layer = max(frontier[q] for q in gate.qubits) + 1
            for q in gate.qubits:
                frontier[q] = layer
        return max(frontier, default=0)

    def two_qubit_count(self) -> int:
        return sum(1 for g in self._gates if g.is_two_qubit)

    # endregion

    # region Magic

    def __len__(self) -> int:
        return len(self._gates)

    def __iter__(self):
        return iter(self._gates)

    def __str__(self) -> str:
        return f"Circuit(width={self._width}, gates={len(self._gates)}, depth={self.depth()}, cx={self.two_qubit_count()})"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(width={self._width}, gates={self._gates!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Circuit):
            return False
        return self._width == other._width and self._gates == other._gates

    # endregion


def circuit_depth(c: Circuit) -> int:
    return c.depth()


def two_qubit_count(c: Circuit) -> int:
    return c.two_qubit_count()
