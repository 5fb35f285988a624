from __future__ import annotations

import math
from enum import Enum

from ampamp.errors import InputError


class GateKind(Enum):
    """Gate set of the compiled circuits."""

    H = "H"  # Hadamard
    X = "X"  # Pauli X
    P = "P"  # Phase gate diag(1, e^{iθ})
    CX = "CX"  # Controlled NOT, qubits = (control, target)


class Gate:
    """A single gate on 1 or 2 qubits.

    Attributes:
        kind (GateKind): Gate type.
        qubits (tuple[int, ...]): Qubit indices; (control, target) for CX.
        angle (float | None): Phase angle in radians for P, None otherwise.
    """

    __slots__ = ("_kind", "_qubits", "_angle")

    # region Init

    def __init__(self, kind: GateKind, qubits: tuple[int, ...], angle: float | None = None):
        """Raises `InputError` for a wrong qubit arity, a CX with control == target, negative
        indices, or an angle on a gate other than P."""
        qubits = tuple(int(q) for q in qubits)
        expected_arity = 2 if kind is GateKind.CX else 1

        # Check: arity matches kind
        if len(qubits) != expected_arity:
            raise InputError(f"Cannot call `Gate.__init__` because $qubits ({qubits}) has {len(qubits)} index(es); {kind.value} needs {expected_arity}")

        # Check: indices are non-negative
        if any(q < 0 for q in qubits):
            raise InputError(f"Cannot call `Gate.__init__` because $qubits ({qubits}) contains a negative index")

        # Check: CX control differs from target
        if kind is GateKind.CX and qubits[0] == qubits[1]:
            raise InputError(f"Cannot call `Gate.__init__` because CX control and target are both qubit {qubits[0]}")

        # Check: only P carries an angle
        if kind is GateKind.P:
            if angle is None or not math.isfinite(angle):
                raise InputError(f"Cannot call `Gate.__init__` because P needs a finite $angle, got {angle!r}")
            angle = float(angle)
        elif angle is not None:
            raise InputError(f"Cannot call `Gate.__init__` because {kind.value} takes no $angle ({angle!r})")

        self._kind = kind
        self._qubits = qubits
        self._angle = angle

    @classmethod
    def h(cls, qubit: int) -> Gate:
        return cls(GateKind.H, (qubit,))

    @classmethod
    def x(cls, qubit: int) -> Gate:
        return cls(GateKind.X, (qubit,))

    @classmethod
    def p(cls, qubit: int, angle: float) -> Gate:
        return cls(GateKind.P, (qubit,), angle)

    @classmethod
    def cx(cls, control: int, target: int) -> Gate:
        return cls(GateKind.CX, (control, target))

    # endregion

    # region Properties

    @property
    def kind(self) -> GateKind:
        return self._kind

    @property
    def qubits(self) -> tuple[int, ...]:
        return self._qubits

    @property
    def angle(self) -> float | None:
        return self._angle

    @property
    def is_two_qubit(self) -> bool:
        return self._kind is GateKind.CX

    # endregion

    def inverse(self) -> Gate:
        """P(θ)† = P(-θ); H, X and CX are self-inverse."""
        if self._kind is GateKind.P:
            return Gate(GateKind.P, self._qubits, -self._angle)
        return self

    # region Magic

    def __str__(self) -> str:
        args = ",".join(f"q{q}" for q in self._qubits)
        if self._kind is GateKind.P:
            return f"P({self._angle!r}) {args}"
        return f"{self._kind.value} {args}"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(kind={self._kind}, qubits={self._qubits}, angle={self._angle!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gate):
            return False
        return self._kind == other._kind and self._qubits == other._qubits and self._angle == other._angle

    def __hash__(self) -> int:
        return hash((self._kind, self._qubits, self._angle))

    # endregion
