"""Amplitude amplification simulated in the D-dimensional collective-state basis.

One iteration is U_s(θ)·U_C(p_s): the oracle multiplies class amplitudes by e^{i·C_j·p_s},
the diffusion shifts every amplitude by -(1 - e^{iθ})·ᾱ with ᾱ = Σ N_j·α_j / 2^N.
Iteration 0 is |s⟩; "iteration k" means k full oracle + diffusion pairs.
"""

from __future__ import annotations

import logging
import math
from typing import NamedTuple, Union

import numpy as np

from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.state.collective_state import CollectiveState
from ampamp.domain.state.oracle_spec import OracleSpec
from ampamp.domain.state.simulation_trace import IterationRecord, SimulationTrace
from ampamp.domain.state.target_selector import TargetSelector
from ampamp.errors import DomainError, InputError, PeakNotFoundError
from ampamp.utils.math import ExactNumber, wrap_angle

logger = logging.getLogger(__name__)

# Slack for the non-strict local-maximum test (absolute probability)
PEAK_TOLERANCE = 1e-12

# Iterations for which the π phase relation between ᾱ and the target is enforced
PHASE_ALIGNMENT_STRICT_ITERATIONS = 2


class PeakResult(NamedTuple):
    k: int
    probability: float
    curve: np.ndarray | None = None


class PhaseAlignment(NamedTuple):
    k: int
    difference: float  # arg(ᾱ) - arg(α_target), wrapped into [-π, π]
    deviation: float  # distance of $difference from π (mod 2π)


# region Single operations


def init_superposition(shape: Union[CostSpectrum, OracleSpec]) -> CollectiveState:
    """Return |s⟩: every class amplitude equals 1/√(2^N)."""
    spectrum = shape.spectrum if isinstance(shape, OracleSpec) else shape
    amplitude = 1.0 / math.sqrt(float(1 << spectrum.n_qubits))
    return CollectiveState(np.full(spectrum.dimension, amplitude, dtype=np.complex128), spectrum.counts, spectrum.n_qubits)


def apply_oracle(state: CollectiveState, oracle: OracleSpec) -> CollectiveState:
    """Multiply α_j by e^{i·C_j·p_s} (class magnitudes are unchanged).

    Raises:
        InputError: If the oracle's classes do not match the state's.
    """
    # Check: dimension and class sizes must agree
    if state.dimension != oracle.dimension or state.n_qubits != oracle.n_qubits or state.counts != oracle.spectrum.counts:
        raise InputError(f"Cannot call `apply_oracle` because the state (N={state.n_qubits}, D={state.dimension}) does not match the oracle {oracle}")
    return state.with_amplitudes(state.amps * oracle.phasors())


def mean_amplitude(state: CollectiveState) -> complex:
    """ᾱ = (1/2^N)·Σ N_j·α_j."""
    return complex(np.dot(state.weights, state.amps))


def apply_diffusion(state: CollectiveState, theta: float) -> CollectiveState:
    """α_j ← α_j - (1 - e^{iθ})·ᾱ for every class."""
    shift = (1.0 - np.exp(1j * theta)) * mean_amplitude(state)
    return state.with_amplitudes(state.amps - shift)


# endregion

# region Runs


def run(oracle: OracleSpec, theta: float, k_max: int) -> SimulationTrace:
    """Iterate oracle + diffusion from |s⟩ and record every iteration.

    Args:
        oracle: The oracle (Grover or cost).
        theta: Diffusion angle θ in radians.
        k_max: Number of iterations (>= 0).

    Returns:
        A trace with records for k = 0..$k_max.
    """
    # Check: non-negative iteration count
    if k_max < 0:
        raise InputError(f"Cannot call `run` because $k_max ({k_max}) is not >= 0")

    state = init_superposition(oracle)
    records = [IterationRecord(k=0, class_probs=state.class_probabilities(), mean_amp=mean_amplitude(state), amplitudes=state.amps)]
    for k in range(1, k_max + 1):
        after_oracle = apply_oracle(state, oracle)
        state = apply_diffusion(after_oracle, theta)
        records.append(
            IterationRecord(
                k=k,
                class_probs=state.class_probabilities(),
                mean_amp=mean_amplitude(state),
                amplitudes=state.amps,
                oracle_amplitudes=after_oracle.amps,
                oracle_mean_amp=mean_amplitude(after_oracle),
            )
        )

    logger.debug(f"Ran {k_max} iteration(s) of {oracle} with θ={theta!r}")
    return SimulationTrace(records, oracle, theta, k_max)


def run_to_first_peak(oracle: OracleSpec, theta: float, selector: TargetSelector, k_cap: int, keep_curve: bool = True) -> PeakResult:
    """Iterate until the selected probability passes its first local maximum.

    Only O(D) state is kept, so this reaches the ~10^6 iterations of 40-qubit problems.

    Args:
        oracle: The oracle.
        theta: Diffusion angle θ.
        selector: Which classes form the target probability.
        k_cap: Maximum number of iterations to simulate.
        keep_curve: Whether to return the probability at every k up to the peak (+1).

    Raises:
        PeakNotFoundError: If no interior peak appears within $k_cap iterations.
    """
    amps = init_superposition(oracle).amps.copy()
    phasors = oracle.phasors()
    weights = oracle.spectrum.probability_weights().astype(np.complex128)
    shift_factor = 1.0 - np.exp(1j * theta)
    idx = np.array(selector.indices, dtype=np.intp)
    selected_counts = np.array([oracle.spectrum.counts[i] for i in idx], dtype=np.float64)

    def selected_probability(a: np.ndarray) -> float:
        sel = a[idx]
        return float(np.dot(selected_counts, sel.real * sel.real + sel.imag * sel.imag))

    curve = [selected_probability(amps)]
    for k in range(1, k_cap + 1):
        amps *= phasors
        amps -= shift_factor * np.dot(weights, amps)
        p = selected_probability(amps)
        curve.append(p)
        if k >= 2 and curve[k - 1] >= curve[k - 2] - PEAK_TOLERANCE and curve[k - 1] >= p - PEAK_TOLERANCE:
            logger.debug(f"First peak of {selector.label} under {oracle}: k={k - 1}, p={curve[k - 1]:.6f}")
            return PeakResult(k - 1, curve[k - 1], np.array(curve) if keep_curve else None)

    raise PeakNotFoundError(f"No interior peak of {selector.label} within $k_cap={k_cap} iterations of {oracle} (θ={theta!r})")


def probability_curve(oracle: OracleSpec, theta: float, selector: TargetSelector, k_max: int) -> np.ndarray:
    """Selected probability for k = 0..$k_max, streaming over O(D) state."""
    # Check: non-negative iteration count
    if k_max < 0:
        raise InputError(f"Cannot call `probability_curve` because $k_max ({k_max}) is not >= 0")

    amps = init_superposition(oracle).amps.copy()
    phasors = oracle.phasors()
    weights = oracle.spectrum.probability_weights().astype(np.complex128)
    shift_factor = 1.0 - np.exp(1j * theta)
    idx = np.array(selector.indices, dtype=np.intp)
    selected_counts = np.array([oracle.spectrum.counts[i] for i in idx], dtype=np.float64)

    curve = np.empty(k_max + 1, dtype=np.float64)
    sel = amps[idx]
    curve[0] = np.dot(selected_counts, sel.real * sel.real + sel.imag * sel.imag)
    for k in range(1, k_max + 1):
        amps *= phasors
        amps -= shift_factor * np.dot(weights, amps)
        sel = amps[idx]
        curve[k] = np.dot(selected_counts, sel.real * sel.real + sel.imag * sel.imag)
    return curve


# endregion

# region Trace queries


def joint_target_probability(trace: SimulationTrace, spectrum: CostSpectrum, c: ExactNumber, k: int) -> float:
    """Probability of class $c plus its inverse class 2·C̄ - c at iteration $k.

    Raises:
        DomainError: If $c is not a value of $spectrum.
    """
    selector = TargetSelector.joint(spectrum, c)
    return selector(trace.record(k).class_probs)


def first_peak(trace: SimulationTrace, selector: TargetSelector) -> PeakResult:
    """Smallest k with p(k) >= p(k-1) and p(k) >= p(k+1).

    Raises:
        PeakNotFoundError: If the trace contains no interior local maximum.
    """
    curve = trace.curve(selector)
    k = find_first_peak(curve)
    if k is None:
        raise PeakNotFoundError(f"No interior peak of {selector.label} in a trace of {len(curve)} record(s)")
    return PeakResult(k, float(curve[k]), curve)


def find_first_peak(curve: np.ndarray) -> int | None:
    """Index of the first non-strict interior local maximum of $curve, or None."""
    if len(curve) < 3:
        return None
    middle = curve[1:-1]
    is_peak = (middle >= curve[:-2] - PEAK_TOLERANCE) & (middle >= curve[2:] - PEAK_TOLERANCE)
    hits = np.nonzero(is_peak)[0]
    return int(hits[0]) + 1 if len(hits) else None


def phase_alignment(trace: SimulationTrace, c: ExactNumber) -> list[PhaseAlignment]:
    """Phase of ᾱ relative to the target class right after each oracle application.

    The diffusion of iteration k reflects about the ᾱ of the post-oracle state, so this is
    where a π phase difference to the target amplifies it.
    """
    j = trace.oracle.spectrum.index_of(c)
    result = []
    for record in trace.records[1:]:
        difference = wrap_angle(np.angle(record.oracle_mean_amp) - np.angle(record.oracle_amplitudes[j]))
        deviation = abs(wrap_angle(difference - math.pi))
        result.append(PhaseAlignment(record.k, difference, deviation))
    return result


def check_phase_alignment(trace: SimulationTrace, c: ExactNumber, tolerance: float = 1e-9) -> list[PhaseAlignment]:
    """Check arg(ᾱ) - arg(α_c) ≡ π after each oracle application.

    The relation is enforced for the first two iterations; later drift is only logged.

    Raises:
        DomainError: If the relation fails within the first two iterations.
    """
    alignments = phase_alignment(trace, c)
    drifted = []
    for a in alignments:
        if a.deviation <= tolerance:
            continue
        if a.k <= PHASE_ALIGNMENT_STRICT_ITERATIONS:
            raise DomainError(f"Phase of ᾱ is not π away from class C={c} at k={a.k}: difference {a.difference!r} rad (deviation {a.deviation:.3e} > {tolerance:.1e})")
        drifted.append(a)

    if drifted:
        worst = max(drifted, key=lambda a: a.deviation)
        logger.warning(f"Phase of ᾱ drifts from π relative to class C={c} in {len(drifted)} iteration(s) after k={PHASE_ALIGNMENT_STRICT_ITERATIONS}; worst at k={worst.k}: {worst.deviation:.3e} rad")
    return alignments


# endregion
