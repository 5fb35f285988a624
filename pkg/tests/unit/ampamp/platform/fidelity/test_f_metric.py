import math

import numpy as np
import pytest

from ampamp.domain.fidelity.experiment_spec import ExperimentSpec
from ampamp.domain.fidelity.measurement_record import MeasurementRecord
from ampamp.errors import InputError
from ampamp.platform.fidelity.f_metric import f_metric, measured_probabilities
from ampamp.platform.fidelity.synthesis import synthesize_records
from ampamp.platform.fidelity.theory import theory_probabilities

SHOTS = 16_000

# Grover on two qubits: P(11) = (10 - 6cosθ)/16, every other state (2 + 2cosθ)/16
GROVER_2 = ExperimentSpec(3, 2, [0.0, math.pi / 2, math.pi, 3 * math.pi / 2, 2 * math.pi])


# region Helpers


def exact_records(spec: ExperimentSpec) -> list[MeasurementRecord]:
    records = []
    for parameter in spec.grid:
        probs = theory_probabilities(spec, parameter)
        counts = {b: round(p * SHOTS) for b, p in probs.items() if round(p * SHOTS)}
        records.append(MeasurementRecord(float(parameter), SHOTS, counts))
    return records


def uniform_records(spec: ExperimentSpec) -> list[MeasurementRecord]:
    n = spec.n_qubits
    counts = {format(i, f"0{n}b"): SHOTS // 2**n for i in range(2**n)}
    return [MeasurementRecord(float(p), SHOTS, counts) for p in spec.grid]


# endregion


def test_exact_theory_scores_one():
    report = f_metric(GROVER_2, exact_records(GROVER_2))
    assert report.f_exp == pytest.approx(1.0, abs=1e-12)
    assert report.f_m == pytest.approx(1.0, abs=1e-12)
    assert report.n_records == 5
    assert report.excluded == ()


def test_uniform_records_score_zero():
    report = f_metric(GROVER_2, uniform_records(GROVER_2))
    assert report.f_exp == pytest.approx(0.0, abs=1e-12)
    assert all(s.f == pytest.approx(0.0, abs=1e-12) for s in report.per_state)


def test_mirrored_records_score_negative():
    spec = ExperimentSpec(3, 2, [math.pi / 2, 3 * math.pi / 2])
    # Half-strength reflection of the theory through the uniform distribution
    mirrored = {"00": 5000, "10": 5000, "01": 5000, "11": 1000}
    records = [MeasurementRecord(float(p), SHOTS, mirrored) for p in spec.grid]
    report = f_metric(spec, records)
    for score in report.per_state:
        assert score.f == pytest.approx(-0.5, abs=1e-9)
    assert report.f_m == pytest.approx(-0.5, abs=1e-9)
    assert report.f_exp == pytest.approx(-0.5, abs=1e-9)


def test_states_without_theory_contrast_are_excluded(caplog):
    spec = ExperimentSpec(1, 2, [0.0])
    report = f_metric(spec, uniform_records(spec))
    assert report.excluded == ("00", "10", "01", "11")
    assert report.f_exp is None
    assert report.f_m is None
    assert "Excluded 4 state(s)" in caplog.text


def test_measured_probabilities():
    record = MeasurementRecord(0.0, 10, {"10": 4, "11": 6})
    assert list(measured_probabilities(record, 2)) == [0.0, 0.4, 0.0, 0.6]
    with pytest.raises(InputError):
        measured_probabilities(record, 3)


def test_invalid_inputs():
    with pytest.raises(InputError):
        f_metric(GROVER_2, [])
    with pytest.raises(InputError):
        f_metric(GROVER_2, [MeasurementRecord(0.1, SHOTS, {"11": 1})])
    with pytest.raises(InputError):
        f_metric(GROVER_2, [MeasurementRecord(0.0, SHOTS, {"111": 1})])


def test_score_does_not_depend_on_record_order():
    spec = ExperimentSpec.default(1, 3, grid_points=20)
    records = synthesize_records(spec, shots=2_000, noise_mix=0.2, seed=3)
    shuffled = [records[i] for i in np.random.default_rng(8).permutation(len(records))]
    assert shuffled != records
    original, permuted = f_metric(spec, records), f_metric(spec, shuffled)
    assert permuted.f_exp == pytest.approx(original.f_exp, abs=1e-12)
    assert permuted.excluded == original.excluded
