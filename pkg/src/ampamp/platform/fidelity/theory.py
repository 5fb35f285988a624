"""First-iteration theory for the hardware experiments.

After one oracle + diffusion pair every basis state in class j has amplitude

    α_j = e^{i·C_j·p_s} / √(2^N) - (1 - e^{iθ})·ᾱ,   ᾱ = (2^N)^{-3/2}·Σ N_j·e^{i·C_j·p_s}

with the Grover oracle as the two-class case (C = 1 on the marked state, p_s = φ).
"""

from __future__ import annotations

import math
from typing import Union

import numpy as np

from ampamp.domain.cost.cost_function import LinearCostFunction
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.domain.cost.weight_sets import w1
from ampamp.domain.fidelity.experiment_spec import ExperimentKind, ExperimentSpec
from ampamp.errors import InputError
from ampamp.platform.spectrum.spectrum_builder import BRUTE_FORCE_MAX_QUBITS, build_spectrum
from ampamp.utils.bits import index_to_bitstring


# region Mean amplitudes


def first_mean_amplitude_grover(n_qubits: int, n_marked: int, phi: float) -> complex:
    """ᾱ(φ) = (2^N)^{-3/2}·(N_n + e^{iφ}·N_m) right after the first Grover oracle."""
    size = 1 << n_qubits
    if not 1 <= n_marked < size:
        raise InputError(f"Cannot call `first_mean_amplitude_grover` because $n_marked ({n_marked}) is not in [1, 2^{n_qubits})")
    return complex((size - n_marked + np.exp(1j * phi) * n_marked) / size**1.5)


def first_mean_amplitude_cost(spectrum: CostSpectrum, ps: Union[PhaseScale, float]) -> complex:
    """ᾱ(p_s) = (2^N)^{-3/2}·Σ N_j·e^{i·C_j·p_s} right after the first cost oracle."""
    size = float(1 << spectrum.n_qubits)
    phasors = PhaseScale.of(ps).phasors(spectrum.values)
    return complex(np.dot(np.asarray(spectrum.counts, dtype=np.float64), phasors) / size**1.5)


# endregion

# region Per-class and per-state theory


def experiment_setup(spec: ExperimentSpec, parameter: float) -> tuple[CostSpectrum, PhaseScale, float]:
    """(spectrum, oracle phase scale, θ) of $spec at one value of its varied parameter."""
    n = spec.n_qubits
    if spec.kind is ExperimentKind.GROVER_VARY_THETA:
        return CostSpectrum.grover(n, ExperimentSpec.N_MARKED), PhaseScale(ExperimentSpec.FIXED_PHI), float(parameter)

    weights = w1(n)
    if spec.kind is ExperimentKind.COST_VARY_PS:
        scale = PhaseScale(parameter * math.pi / weights.n_prime)
        theta = ExperimentSpec.FIXED_THETA
    else:
        scale = PhaseScale(ExperimentSpec.FIXED_PS * math.pi / weights.n_prime)
        theta = float(parameter)
    return build_spectrum(weights), scale, theta


def theory_class_amplitudes(spec: ExperimentSpec, parameter: float) -> tuple[CostSpectrum, np.ndarray]:
    """Per-basis-state amplitude α_j of every class after the first iteration."""
    spectrum, scale, theta = experiment_setup(spec, parameter)
    size = float(1 << spectrum.n_qubits)
    phasors = scale.phasors(spectrum.values)
    mean = np.dot(np.asarray(spectrum.counts, dtype=np.float64), phasors) / size**1.5
    return spectrum, phasors / math.sqrt(size) - (1 - np.exp(1j * theta)) * mean


def theory_basis_probabilities(spec: ExperimentSpec, parameter: float) -> np.ndarray:
    """Theoretical probability of every basis state, indexed by basis index."""
    if spec.n_qubits > BRUTE_FORCE_MAX_QUBITS:
        raise InputError(f"Cannot call `theory_basis_probabilities` because N ({spec.n_qubits}) > {BRUTE_FORCE_MAX_QUBITS}")
    spectrum, amplitudes = theory_class_amplitudes(spec, parameter)
    class_probs = np.abs(amplitudes) ** 2
    return class_probs[_class_of_basis(spec, spectrum)]


def theory_probabilities(spec: ExperimentSpec, parameter: float) -> dict[str, float]:
    """Bitstring -> theoretical probability after the first iteration."""
    probs = theory_basis_probabilities(spec, parameter)
    return {index_to_bitstring(i, spec.n_qubits): float(p) for i, p in enumerate(probs)}


def f_contour(spec: ExperimentSpec, parameter: float, f: float) -> np.ndarray:
    """Probability a state would show with a constant score $f: P + (1 - f)·(1/2^N - P)."""
    probs = theory_basis_probabilities(spec, parameter)
    return probs + (1.0 - f) * (1.0 / (1 << spec.n_qubits) - probs)


# endregion

# region Internal


def _class_of_basis(spec: ExperimentSpec, spectrum: CostSpectrum) -> np.ndarray:
    size = 1 << spec.n_qubits
    if spec.kind is ExperimentKind.GROVER_VARY_THETA:
        classes = np.zeros(size, dtype=np.intp)
        classes[size - 1] = 1
        return classes

    costs, denominator = LinearCostFunction(w1(spec.n_qubits)).evaluate_all_scaled()
    values = np.array([int(v * denominator) for v in spectrum.values], dtype=np.int64)
    return np.searchsorted(values, costs)


# endregion
