"""Gate-level circuits for the diffusion operator, the oracles and the three hardware experiments.

Qubit i carries bit z_{i+1}; the multi-controlled phase targets the highest-index qubit.
"""

from __future__ import annotations

import logging
import math
from typing import Union

from ampamp.domain.circuit.circuit import Circuit
from ampamp.domain.circuit.gate import Gate
from ampamp.domain.circuit.gray_sequence import gray_sequence
from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.cost.weight_sets import w1
from ampamp.domain.fidelity.experiment_spec import ExperimentKind
from ampamp.errors import InputError

logger = logging.getLogger(__name__)


# region Building blocks


def compile_mcp(n_qubits: int, theta: float) -> Circuit:
    """Multi-controlled phase C^{N-1}-P(θ): e^{iθ} on |1…1⟩, identity elsewhere.

    Uses θ′ = θ / 2^{N-1} and the cascade U_1 … U_N. U_1 is P(θ′) on qubit 0. U_k walks the
    reversed Gray sequence of the k-1 lower qubits from all zeros: each step is a CX from the
    qubit whose bit changed onto qubit k-1, then V† = P(-θ′) for odd code weight or V = P(θ′) for
    even weight. Uses exactly 2^N - 2 CX gates.

    Raises:
        InputError: If $n_qubits < 1.
    """
    # Check: at least one qubit
    if n_qubits < 1:
        raise InputError(f"Cannot call `compile_mcp` because $n_qubits ({n_qubits}) is not >= 1")

    theta_prime = theta / (1 << (n_qubits - 1))
    circuit = Circuit(n_qubits)
    circuit.append(Gate.p(0, theta_prime))

    for k in range(2, n_qubits + 1):
        target = k - 1
        codes = ("0" * (k - 1),) + tuple(reversed(gray_sequence(k - 1).codes))
        for previous, current in zip(codes, codes[1:]):
            control = next(i for i, (a, b) in enumerate(zip(previous, current)) if a != b)
            circuit.append(Gate.cx(control, target))
            sign = -1 if current.count("1") % 2 else 1
            circuit.append(Gate.p(target, sign * theta_prime))

    logger.debug(f"Compiled C^{n_qubits - 1}-P({theta!r}): {circuit}")
    return circuit


def compile_diffusion(n_qubits: int, theta: float) -> Circuit:
    """U_s(θ) = H⊗N · X⊗N · C^{N-1}-P(θ) · X⊗N · H⊗N."""
    circuit = Circuit(n_qubits)
    _hadamard_layer(circuit)
    _x_layer(circuit)
    circuit = circuit.compose(compile_mcp(n_qubits, theta))
    _x_layer(circuit)
    _hadamard_layer(circuit)
    return circuit


def compile_grover_oracle(n_qubits: int, phi: float) -> Circuit:
    """U_G(φ) marking |1…1⟩."""
    return compile_mcp(n_qubits, phi)


def compile_cost_oracle_linear(w: WeightSet, ps: Union[PhaseScale, float], scaled_by_n_prime: bool = False) -> Circuit:
    """One P gate per qubit: angle W_i·p_s, or W_i·π·p_s/N′ with $scaled_by_n_prime.

    The resulting diagonal is e^{i·C(Z)·p_s} (e^{i·C(Z)·π·p_s/N′} when scaled).
    """
    scale = PhaseScale.of(ps)
    if scaled_by_n_prime:
        factor = math.pi * scale.radians / w.n_prime
        angles = [float(weight) * factor for weight in w.weights]
    else:
        angles = [scale.phase(weight) for weight in w.weights]
    return Circuit(w.n_qubits, [Gate.p(i, angle) for i, angle in enumerate(angles)])


def compile_experiment(kind: Union[ExperimentKind, int], n_qubits: int, parameter: float) -> Circuit:
    """Full circuit of one experiment point.

    Args:
        kind: 1 (vary p_s, θ = π), 2 (p_s = 1, vary θ) or 3 (Grover φ = π, vary θ).
        n_qubits: N >= 2.
        parameter: p_s for experiment 1, θ for experiments 2 and 3.

    Raises:
        InputError: For an unknown kind or $n_qubits < 2.
    """
    kind = ExperimentKind.parse(kind)
    # Check: experiments need at least two qubits
    if n_qubits < 2:
        raise InputError(f"Cannot call `compile_experiment` because $n_qubits ({n_qubits}) is not >= 2")

    circuit = _hadamard_layer(Circuit(n_qubits))
    if kind is ExperimentKind.COST_VARY_PS:
        circuit = circuit.compose(compile_cost_oracle_linear(w1(n_qubits), parameter, scaled_by_n_prime=True))
        circuit = circuit.compose(compile_diffusion(n_qubits, math.pi))
    elif kind is ExperimentKind.COST_VARY_THETA:
        circuit = circuit.compose(compile_cost_oracle_linear(w1(n_qubits), 1.0, scaled_by_n_prime=True))
        circuit = circuit.compose(compile_diffusion(n_qubits, parameter))
    else:
        circuit = circuit.compose(compile_grover_oracle(n_qubits, math.pi))
        circuit = circuit.compose(compile_diffusion(n_qubits, parameter))

    logger.debug(f"Compiled experiment {int(kind)} (N={n_qubits}, parameter={parameter!r}): {circuit}")
    return circuit


# endregion

# region Metrics


def circuit_metrics(c: Circuit) -> dict[str, int]:
    """Logical metrics without routing: depth, CX count, total gates and width."""
    return {
        "depth": c.depth(),
        "two_qubit_gates": c.two_qubit_count(),
        "total_gates": len(c),
        "width": c.width,
    }


# endregion

# region Internal


def _hadamard_layer(circuit: Circuit) -> Circuit:
    return circuit.extend(Gate.h(q) for q in range(circuit.width))


def _x_layer(circuit: Circuit) -> Circuit:
    return circuit.extend(Gate.x(q) for q in range(circuit.width))


# endregion
