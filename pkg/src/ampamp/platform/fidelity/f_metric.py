"""Scoring of measurement records against first-iteration theory.

Per basis state i and record j: ΔP_ij = Meas_ij - P_ij and ΔP̃_ij = 1/2^N - P_ij, the latter being
the deviation a fully decohered (uniform) device would show. RMS_i and RMS̃_i average the
squares over all records, and f_i = 1 - RMS_i / RMS̃_i: 1 at exact agreement, 0 at the uniform
distribution, negative when the device is worse than uniform.
"""

from __future__ import annotations

import logging
from typing import Sequence

import numpy as np

from ampamp.domain.fidelity.experiment_spec import ExperimentKind, ExperimentSpec
from ampamp.domain.fidelity.fidelity_report import FidelityReport, StateScore
from ampamp.domain.fidelity.measurement_record import MeasurementRecord
from ampamp.errors import InputError
from ampamp.platform.fidelity.theory import theory_basis_probabilities
from ampamp.utils.bits import bitstring_to_index, index_to_bitstring

logger = logging.getLogger(__name__)

# RMS̃_i below this means the theory never leaves 1/2^N for that state
DECOHERED_RMS_FLOOR = 1e-12


def measured_probabilities(record: MeasurementRecord, n_qubits: int) -> np.ndarray:
    """Meas(|Z_i⟩) = counts / shots by basis index; missing bitstrings count as zero.

    Raises:
        InputError: If the record's bitstrings are not $n_qubits long.
    """
    if record.n_qubits is not None and record.n_qubits != n_qubits:
        raise InputError(f"Cannot call `measured_probabilities` because the record has {record.n_qubits}-bit outcomes, not {n_qubits}")
    probs = np.zeros(1 << n_qubits, dtype=np.float64)
    for bitstring, count in record.counts.items():
        probs[bitstring_to_index(bitstring)] = count / record.shots
    return probs


def f_metric(spec: ExperimentSpec, records: Sequence[MeasurementRecord]) -> FidelityReport:
    """Score $records of $spec.

    States whose theory equals 1/2^N at every recorded parameter have RMS̃_i = 0; they get
    f_i = None, are left out of f_exp and are listed in the report's `excluded`.

    Raises:
        InputError: If $records is empty, or a record's parameter is off the grid or its
            bitstrings have the wrong length.
    """
    # Check: at least one record
    if not records:
        raise InputError("Cannot call `f_metric` because $records is empty")

    n = spec.n_qubits
    uniform = 1.0 / (1 << n)
    squared = np.zeros(1 << n, dtype=np.float64)
    squared_decohered = np.zeros(1 << n, dtype=np.float64)
    for record in records:
        spec.grid_index(record.param)
        theory = theory_basis_probabilities(spec, record.param)
        squared += (measured_probabilities(record, n) - theory) ** 2
        squared_decohered += (uniform - theory) ** 2

    rms = np.sqrt(squared / len(records))
    rms_decohered = np.sqrt(squared_decohered / len(records))

    scores = []
    for i in range(1 << n):
        f = None if rms_decohered[i] < DECOHERED_RMS_FLOOR else float(1.0 - rms[i] / rms_decohered[i])
        scores.append(StateScore(index_to_bitstring(i, n), float(rms[i]), float(rms_decohered[i]), f))

    excluded = tuple(s.bitstring for s in scores if s.excluded)
    if excluded:
        logger.warning(f"Excluded {len(excluded)} state(s) whose theory stays at 1/2^N on every record: {list(excluded)}")

    included = [s.f for s in scores if not s.excluded]
    f_exp = float(np.mean(included)) if included else None

    f_m = None
    if spec.kind is ExperimentKind.GROVER_VARY_THETA:
        f_m = scores[(1 << n) - 1].f

    logger.info(f"Scored {len(records)} record(s) of {spec}: f_exp={f_exp}, f_m={f_m}")
    return FidelityReport(int(spec.kind), n, len(records), tuple(scores), f_exp, f_m, excluded)
