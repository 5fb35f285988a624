"""CSV tables built as pandas DataFrames.

Cost values are written as exact rationals (`27`, `-29/2`); angles are radians everywhere.
"""

from __future__ import annotations

import logging
from pathlib import Path

import pandas as pd

from ampamp.domain.analysis.scan_result import ScanResult
from ampamp.domain.cost.cost_function import CostFunction
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.state.simulation_trace import SimulationTrace
from ampamp.errors import InputError
from ampamp.platform.simulation.collective_simulator import init_superposition, mean_amplitude
from ampamp.platform.spectrum.spectrum_builder import class_members
from ampamp.utils.math import to_fraction

logger = logging.getLogger(__name__)

COMPLEX_PLANE_STAGES = ("oracle", "diffusion")


# region Spectrum


def spectrum_table(spectrum: CostSpectrum) -> pd.DataFrame:
    """Columns `C`, `count` in increasing C order."""
    return pd.DataFrame({"C": [str(v) for v in spectrum.values], "count": list(spectrum.counts)})


def members_table(costfn: CostFunction, spectrum: CostSpectrum) -> pd.DataFrame:
    """Columns `C`, `count`, `members` (space-separated bitstrings of each class)."""
    members = [" ".join(class_members(costfn, v)) for v in spectrum.values]
    return pd.DataFrame({"C": [str(v) for v in spectrum.values], "count": list(spectrum.counts), "members": members})


def read_spectrum_csv(path: str | Path) -> CostSpectrum:
    """Load a spectrum written by `spectrum_table`; N is inferred from Σ counts = 2^N.

    Raises:
        InputError: If columns are missing or Σ counts is not a power of two.
    """
    df = pd.read_csv(path, dtype={"C": str})

    # Check: required columns present
    missing = [c for c in ("C", "count") if c not in df.columns]
    if missing:
        raise InputError(f"Spectrum file '{path}' is missing required columns: {', '.join(missing)}")

    counts = [int(c) for c in df["count"]]
    total = sum(counts)
    # Check: counts must cover 2^N bitstrings
    if total < 1 or total & (total - 1):
        raise InputError(f"Spectrum file '{path}' has Σ count ({total}), which is not a power of two")

    values = [to_fraction(v.strip()) for v in df["C"]]
    return CostSpectrum(values, counts, total.bit_length() - 1)


# endregion

# region Traces


def trace_table(trace: SimulationTrace) -> pd.DataFrame:
    """Columns `k`, `C`, `count`, `prob`: class probability per iteration."""
    spectrum = trace.oracle.spectrum
    rows = []
    for record in trace.records:
        for value, count, prob in zip(spectrum.values, spectrum.counts, record.class_probs):
            rows.append((record.k, str(value), count, float(prob)))
    return pd.DataFrame(rows, columns=["k", "C", "count", "prob"])


def complex_plane_table(trace: SimulationTrace, stage: str = "oracle") -> pd.DataFrame:
    """Per-class amplitudes and ᾱ for every iteration.

    Args:
        trace: Simulation trace.
        stage: "oracle" exports, for k >= 1, the state right after the k-th oracle (the state the
            k-th diffusion reflects about its mean); "diffusion" exports the state after the k-th
            diffusion. Row k = 0 is |s⟩ in both cases.
    """
    # Check: known stage
    if stage not in COMPLEX_PLANE_STAGES:
        raise InputError(f"Cannot call `complex_plane_table` because $stage ('{stage}') is not one of {COMPLEX_PLANE_STAGES}")

    spectrum = trace.oracle.spectrum
    start = init_superposition(spectrum)
    rows = []
    for record in trace.records:
        if record.k == 0:
            amps, mean = start.amps, mean_amplitude(start)
        elif stage == "oracle":
            amps, mean = record.oracle_amplitudes, record.oracle_mean_amp
        else:
            amps, mean = record.amplitudes, record.mean_amp
        for value, count, alpha in zip(spectrum.values, spectrum.counts, amps):
            rows.append((record.k, str(value), count, float(alpha.real), float(alpha.imag), float(mean.real), float(mean.imag)))
    return pd.DataFrame(rows, columns=["k", "C", "count", "re_alpha", "im_alpha", "re_mean", "im_mean"])


def export_complex_plane(trace: SimulationTrace, stage: str = "oracle") -> pd.DataFrame:
    return complex_plane_table(trace, stage)


# endregion

# region Analysis


def sweep_table(sweep: pd.DataFrame) -> pd.DataFrame:
    """Sweep result with exact target values rendered as text."""
    out = sweep.copy()
    out["target"] = [str(t) for t in out["target"]]
    return out[["ps", "target", "peak_prob", "k_peak"]]


def scan_table(scan: ScanResult) -> pd.DataFrame:
    """Columns `C`, `count`, `ps`, `sigma_ps`, `peak_prob`, `k_peak`; skipped classes have empty cells."""
    return pd.DataFrame(
        {
            "C": [str(c.value) for c in scan.per_class],
            "count": [c.count for c in scan.per_class],
            "ps": [c.ps for c in scan.per_class],
            "sigma_ps": [c.sigma_ps for c in scan.per_class],
            "peak_prob": [c.peak_prob for c in scan.per_class],
            "k_peak": pd.array([c.k_peak for c in scan.per_class], dtype="Int64"),
        }
    )


def grover_refs_table(scan: ScanResult) -> pd.DataFrame:
    """Columns `n_marked`, `k_grover`, `k_plus_5pct`."""
    return pd.DataFrame(
        {
            "n_marked": [r.n_marked for r in scan.grover_refs],
            "k_grover": [r.k_grover for r in scan.grover_refs],
            "k_plus_5pct": [r.k_plus_5pct for r in scan.grover_refs],
        }
    )


# endregion


def write_table(df: pd.DataFrame, path: str | Path) -> Path:
    """Write $df as CSV without the index."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(target, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(df)} row(s) to '{target}'")
    return target
