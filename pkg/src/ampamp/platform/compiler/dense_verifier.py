"""Dense simulation of compiled circuits, used to verify them against their intended matrices.

Basis index bit q is the state of qubit q.
"""

from __future__ import annotations

import logging
import math
from typing import Iterable

import numpy as np

from ampamp.domain.circuit.circuit import Circuit
from ampamp.domain.circuit.gate import Gate, GateKind
from ampamp.errors import CapacityError, InputError

logger = logging.getLogger(__name__)

DENSE_MAX_QUBITS = 10

_H = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def unitary_of_circuit(c: Circuit) -> np.ndarray:
    """Full 2^N × 2^N matrix of $c, built by applying each gate to the identity.

    Raises:
        CapacityError: If the circuit is wider than 10 qubits.
    """
    _check_width(c, "unitary_of_circuit")
    size = 1 << c.width
    matrix = np.eye(size, dtype=np.complex128)
    for gate in c:
        matrix = _apply_gate(matrix, gate, c.width)
    return matrix


def statevector_of_circuit(c: Circuit, initial: np.ndarray | None = None) -> np.ndarray:
    """Apply $c to $initial (|0…0⟩ by default) gate by gate."""
    _check_width(c, "statevector_of_circuit")
    size = 1 << c.width
    if initial is None:
        state = np.zeros(size, dtype=np.complex128)
        state[0] = 1.0
    else:
        state = np.asarray(initial, dtype=np.complex128).reshape(size).copy()
    state = state.reshape(size, 1)
    for gate in c:
        state = _apply_gate(state, gate, c.width)
    return state.reshape(size)


def verify_diagonal_phase(c: Circuit, expected_phases: Iterable[float]) -> float:
    """Max deviation of $c's unitary from diag(e^{i·phase_j}), up to one global phase."""
    phases = np.asarray(list(expected_phases), dtype=np.float64)
    if len(phases) != 1 << c.width:
        raise InputError(f"Cannot call `verify_diagonal_phase` because $expected_phases has {len(phases)} entries, not 2^{c.width}")
    return unitary_deviation(unitary_of_circuit(c), np.diag(np.exp(1j * phases)))


def unitary_deviation(actual: np.ndarray, expected: np.ndarray) -> float:
    """max |actual - e^{iγ}·expected| with the global phase γ fitted from the overlap."""
    overlap = np.vdot(expected, actual)
    global_phase = overlap / abs(overlap) if abs(overlap) > 0 else 1.0
    return float(np.max(np.abs(actual - global_phase * expected)))


def diffusion_matrix(n_qubits: int, theta: float) -> np.ndarray:
    """I - (1 - e^{iθ})·|s⟩⟨s| as a dense matrix."""
    size = 1 << n_qubits
    s = np.full(size, 1.0 / math.sqrt(size), dtype=np.complex128)
    return np.eye(size, dtype=np.complex128) - (1 - np.exp(1j * theta)) * np.outer(s, s.conj())


# region Internal


def _check_width(c: Circuit, caller: str) -> None:
    if c.width > DENSE_MAX_QUBITS:
        raise CapacityError(f"Cannot call `{caller}` because the circuit width ({c.width}) > {DENSE_MAX_QUBITS}")


def _apply_gate(states: np.ndarray, gate: Gate, width: int) -> np.ndarray:
    """Apply $gate to every column of $states (shape 2^N × m)."""
    columns = states.shape[1]
    if gate.kind is GateKind.CX:
        control, target = gate.qubits
        tensor = states.reshape((2,) * width + (columns,))
        # Axis for qubit q is width - 1 - q (C-order reshape, qubit 0 is the last bit axis)
        c_axis, t_axis = width - 1 - control, width - 1 - target
        result = tensor.copy()
        selector = [slice(None)] * (width + 1)
        selector[c_axis] = 1
        block = tensor[tuple(selector)]
        result[tuple(selector)] = np.flip(block, axis=t_axis if t_axis < c_axis else t_axis - 1)
        return result.reshape(states.shape)

    (qubit,) = gate.qubits
    if gate.kind is GateKind.P:
        result = states.copy()
        mask = ((np.arange(states.shape[0]) >> qubit) & 1).astype(bool)
        result[mask] *= np.exp(1j * gate.angle)
        return result

    single = _H if gate.kind is GateKind.H else _X
    tensor = states.reshape(1 << (width - 1 - qubit), 2, 1 << qubit, columns)
    return np.einsum("ab,xbyc->xayc", single, tensor).reshape(states.shape)


# endregion
