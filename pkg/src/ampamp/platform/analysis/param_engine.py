"""Phase-scale selection, ps sweeps and whole-spectrum scans."""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import numpy as np
import pandas as pd

from ampamp.domain.analysis.scan_result import ClassScan, GroverReference, ScanResult
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.state.oracle_spec import OracleSpec
from ampamp.domain.state.target_selector import TargetSelector
from ampamp.errors import DomainError, InputError, PeakNotFoundError
from ampamp.platform.analysis.grover_closed_form import GroverAnalytic, peak_iteration
from ampamp.platform.simulation.collective_simulator import probability_curve, run_to_first_peak
from ampamp.platform.spectrum.spectrum_builder import build_spectrum
from ampamp.platform.workers import map_ordered
from ampamp.utils.math import ExactNumber, to_fraction

logger = logging.getLogger(__name__)

DEFAULT_GRID_POINTS = 100

# Multiple of the single-marked-state Grover count simulated before giving up on a peak
K_CAP_FACTOR = 2.5


# region Phase scale


def ps_for_target(spectrum: CostSpectrum, c: ExactNumber, sign: int | None = None) -> PhaseScale:
    """Phase scale ±π / (C̄ - c) that puts class $c a half turn away from the mean.

    Args:
        spectrum: The spectrum providing C̄.
        c: Target cost value.
        sign: +1 or -1; by default the sign that makes the result positive.

    Raises:
        DomainError: If $c equals C̄.
        InputError: If $sign is not ±1.
    """
    value = to_fraction(c)
    distance = spectrum.c_bar - value
    # Check: the target must differ from the mean
    if distance == 0:
        raise DomainError(f"Cannot call `ps_for_target` because $c ({value}) equals C̄ ({spectrum.c_bar}); no phase scale exists")

    if sign is None:
        sign = 1 if distance > 0 else -1
    elif sign not in (1, -1):
        raise InputError(f"Cannot call `ps_for_target` because $sign ({sign}) is not +1 or -1")

    return PhaseScale.from_pi_multiple(Fraction(sign) / distance)


def default_k_cap(n_qubits: int) -> int:
    """ceil(2.5·π/4·√(2^N)): enough iterations to pass the first peak of any class."""
    return math.ceil(K_CAP_FACTOR * math.pi / 4 * math.sqrt(float(1 << n_qubits)))


def ps_grid(start: float, stop: float, count: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Inclusive, evenly spaced grid of $count points."""
    # Check: a grid needs at least one point
    if count < 1:
        raise InputError(f"Cannot call `ps_grid` because $count ({count}) is not >= 1")
    return np.linspace(start, stop, count)


def extremal_targets(spectrum: CostSpectrum, count: int) -> list[Fraction]:
    """The $count lowest cost values of $spectrum."""
    if count < 1:
        raise InputError(f"Cannot call `extremal_targets` because $count ({count}) is not >= 1")
    return list(spectrum.values[:count])


# endregion

# region Sweep


class _SweepTask(NamedTuple):
    spectrum: CostSpectrum
    target: Fraction
    ps: PhaseScale
    theta: float
    k_cap: int


def _run_sweep_task(task: _SweepTask) -> tuple[float, int]:
    selector = TargetSelector.joint(task.spectrum, task.target)
    peak = run_to_first_peak(OracleSpec.cost(task.spectrum, task.ps), task.theta, selector, task.k_cap, keep_curve=False)
    return peak.probability, peak.k


def ps_sweep(
    spectrum: CostSpectrum,
    targets: Sequence[ExactNumber],
    ps_values: Iterable[Union[PhaseScale, float]],
    theta: float,
    k_cap: int | None = None,
    jobs: int = 1,
) -> pd.DataFrame:
    """Peak joint probability (target plus inverse class) at every grid point.

    Args:
        spectrum: Cost spectrum.
        targets: Target cost values; each must be a class of $spectrum.
        ps_values: Phase scales to evaluate.
        theta: Diffusion angle θ.
        k_cap: Iteration cap per point; defaults to `default_k_cap(N)`.
        jobs: Worker processes.

    Returns:
        DataFrame with columns `ps`, `target`, `peak_prob`, `k_peak`, ordered by grid point
        then target.

    Raises:
        InputError: If the grid or the target list is empty.
        DomainError: If a target is not a class of $spectrum.
        PeakNotFoundError: If some point shows no peak within $k_cap.
    """
    scales = [PhaseScale.of(p) for p in ps_values]
    values = [to_fraction(t) for t in targets]
    # Check: non-empty inputs
    if not scales:
        raise InputError("Cannot call `ps_sweep` because $ps_values is empty")
    if not values:
        raise InputError("Cannot call `ps_sweep` because $targets is empty")
    for v in values:
        spectrum.index_of(v)

    cap = k_cap if k_cap is not None else default_k_cap(spectrum.n_qubits)
    tasks = [_SweepTask(spectrum, v, s, theta, cap) for s in scales for v in values]
    logger.info(f"Sweeping {len(scales)} ps value(s) × {len(values)} target(s) on {spectrum} with θ={theta!r}")
    results = map_ordered(_run_sweep_task, tasks, jobs)

    return pd.DataFrame(
        {
            "ps": [t.ps.radians for t in tasks],
            "target": [t.target for t in tasks],
            "peak_prob": [p for p, _ in results],
            "k_peak": [k for _, k in results],
        }
    )


# endregion

# region Scan


class _ScanTask(NamedTuple):
    spectrum: CostSpectrum
    index: int
    theta: float
    k_cap: int


def _run_scan_task(task: _ScanTask) -> ClassScan:
    spectrum = task.spectrum
    value = spectrum.values[task.index]
    selector = TargetSelector.joint(spectrum, value)
    joint_count = sum(spectrum.counts[i] for i in selector.indices)

    if value == spectrum.c_bar:
        return ClassScan(value, spectrum.counts[task.index], joint_count, None, None, None, None)

    ps = ps_for_target(spectrum, value)
    sigma = spectrum.sigma_scaled(ps)
    try:
        peak = run_to_first_peak(OracleSpec.cost(spectrum, ps), task.theta, selector, task.k_cap, keep_curve=False)
    except PeakNotFoundError:
        logger.warning(f"No peak for class C={value} within {task.k_cap} iterations; recorded without a peak")
        return ClassScan(value, spectrum.counts[task.index], joint_count, ps.radians, sigma, None, None)
    return ClassScan(value, spectrum.counts[task.index], joint_count, ps.radians, sigma, peak.probability, peak.k)


def spectrum_scan(
    spectrum: CostSpectrum,
    theta: float,
    k_cap: int | None = None,
    jobs: int = 1,
    targets: Sequence[ExactNumber] | None = None,
) -> ScanResult:
    """Scan classes of $spectrum, each at its own phase scale ±π/(C̄ - C_j).

    Classes at C̄ are recorded as skipped. Grover references are added for every distinct joint
    class size.

    Args:
        spectrum: Spectrum of a linear cost function.
        theta: Diffusion angle θ.
        k_cap: Iteration cap per class; defaults to `default_k_cap(N)`.
        jobs: Worker processes.
        targets: Restrict the scan to these cost values (all classes by default).
    """
    cap = k_cap if k_cap is not None else default_k_cap(spectrum.n_qubits)
    if targets is None:
        indices = list(range(spectrum.dimension))
    else:
        indices = [spectrum.index_of(t) for t in targets]

    logger.info(f"Scanning {len(indices)} class(es) of {spectrum} with θ={theta!r}, k_cap={cap}")
    per_class = map_ordered(_run_scan_task, [_ScanTask(spectrum, j, theta, cap) for j in indices], jobs)

    skipped = [c for c in per_class if c.skipped]
    if skipped:
        logger.info(f"Skipped {len(skipped)} class(es) at C̄={spectrum.c_bar}")

    marked_counts = sorted({c.joint_count for c in per_class if not c.skipped and c.joint_count < (1 << spectrum.n_qubits)})
    return ScanResult(tuple(per_class), tuple(grover_refs(spectrum.n_qubits, marked_counts)), float(theta), spectrum.n_qubits)


# endregion

# region Grover comparisons


def grover_k_reference(n_qubits: int, n_marked: int) -> int:
    """Grover iteration count round(π/4·√(2^N/N_m)), corrected to the exact peak when off by one.

    Raises:
        InputError: If not 1 <= $n_marked < 2^$n_qubits.
    """
    if not 1 <= n_marked < (1 << n_qubits):
        raise InputError(f"Cannot call `grover_k_reference` because $n_marked ({n_marked}) is not in [1, 2^{n_qubits})")
    rounded = max(1, round(math.pi / 4 * math.sqrt((1 << n_qubits) / n_marked)))
    return peak_iteration(GroverAnalytic(n_qubits, n_marked, math.pi, math.pi), around=rounded)


def grover_refs(n_qubits: int, marked_counts: Iterable[int]) -> list[GroverReference]:
    """Grover reference iteration counts for each N_m in $marked_counts."""
    return [GroverReference(m, grover_k_reference(n_qubits, m)) for m in marked_counts]


def grover_vs_cost_curves(weights: WeightSet, target: ExactNumber, k_max: int, theta: float = math.pi) -> pd.DataFrame:
    """Joint-target probability under the cost oracle next to the N_m-matched Grover curve.

    The cost oracle uses the phase scale of $target; the Grover search marks as many states as
    the target and its inverse class together, with φ = θ = π.

    Returns:
        DataFrame with columns `k`, `cost`, `grover` for k = 0..$k_max.
    """
    spectrum = build_spectrum(weights)
    selector = TargetSelector.joint(spectrum, target)
    n_marked = sum(spectrum.counts[i] for i in selector.indices)
    cost_curve = probability_curve(OracleSpec.cost(spectrum, ps_for_target(spectrum, target)), theta, selector, k_max)

    grover_oracle = OracleSpec.grover(spectrum.n_qubits, n_marked, math.pi)
    grover_curve = probability_curve(grover_oracle, math.pi, TargetSelector.class_index(grover_oracle.marked_index, "m"), k_max)

    return pd.DataFrame({"k": np.arange(k_max + 1), "cost": cost_curve, "grover": grover_curve})


# endregion
