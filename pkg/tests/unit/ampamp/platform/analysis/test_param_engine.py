import math
from fractions import Fraction

import pytest

from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.domain.cost.weight_sets import W2, w1
from ampamp.errors import DomainError, InputError
from ampamp.platform.analysis.param_engine import (
    default_k_cap,
    extremal_targets,
    grover_k_reference,
    grover_refs,
    grover_vs_cost_curves,
    ps_for_target,
    ps_grid,
    ps_sweep,
    spectrum_scan,
)
from ampamp.platform.io.tables import scan_table
from ampamp.platform.spectrum.spectrum_builder import build_spectrum

W1_4 = build_spectrum(w1(4))
W1_5 = build_spectrum(w1(5))
W2_SPECTRUM = build_spectrum(W2)


# region Phase scale


def test_ps_for_target_examples():
    ps = ps_for_target(build_spectrum(w1(10)), 2)
    assert ps.pi_multiple == Fraction(2, 51)
    assert ps.radians == pytest.approx(math.pi / 25.5)
    assert ps.radians == pytest.approx(0.123200, abs=1e-6)
    assert ps_for_target(build_spectrum(w1(40)), 2).pi_multiple == Fraction(1, 408)


def test_ps_for_target_sign():
    assert ps_for_target(W1_5, 0, sign=-1).radians == pytest.approx(-math.pi / 7.5)
    # Targets above the mean flip the sign by default
    assert ps_for_target(W1_5, 15).radians == pytest.approx(math.pi / 7.5)
    assert ps_for_target(W1_5, 15, sign=1).radians == pytest.approx(-math.pi / 7.5)
    with pytest.raises(InputError):
        ps_for_target(W1_5, 0, sign=2)


def test_ps_for_target_at_mean():
    with pytest.raises(DomainError):
        ps_for_target(W1_4, 5)


def test_grid_helpers():
    assert list(ps_grid(0.0, 1.0, 3)) == [0.0, 0.5, 1.0]
    assert extremal_targets(W2_SPECTRUM, 2) == [-223, -221]
    assert default_k_cap(10) == math.ceil(2.5 * math.pi / 4 * 32)
    with pytest.raises(InputError):
        ps_grid(0.0, 1.0, 0)


# endregion

# region Sweep


def test_sweep_layout():
    df = ps_sweep(W1_5, [0, 1], [0.2, 0.4, 0.6], math.pi)
    assert list(df.columns) == ["ps", "target", "peak_prob", "k_peak"]
    assert list(df["ps"]) == [0.2, 0.2, 0.4, 0.4, 0.6, 0.6]
    assert list(df["target"]) == [0, 1, 0, 1, 0, 1]


def test_sweep_is_symmetric_in_ps():
    df = ps_sweep(W1_5, [0], [0.3, -0.3, 1.1, -1.1], math.pi)
    assert df["peak_prob"][0] == pytest.approx(df["peak_prob"][1], abs=1e-12)
    assert df["peak_prob"][2] == pytest.approx(df["peak_prob"][3], abs=1e-12)
    assert df["k_peak"][0] == df["k_peak"][1]


def test_sweep_zero_phase_scale_keeps_initial_probability():
    df = ps_sweep(W2_SPECTRUM, [-223], [0.0], math.pi)
    assert df["peak_prob"][0] == pytest.approx(2 / 2**20)
    assert df["k_peak"][0] == 1


def test_sweep_extremal_w2_target():
    ps = ps_for_target(W2_SPECTRUM, -223)
    df = ps_sweep(W2_SPECTRUM, [-223], [ps], math.pi)
    assert df["peak_prob"][0] >= 0.5


def test_sweep_parallel_matches_serial():
    grid = ps_grid(0.1, 1.0, 4)
    serial = ps_sweep(W1_5, [0, 2], grid, math.pi)
    parallel = ps_sweep(W1_5, [0, 2], grid, math.pi, jobs=2)
    assert serial.equals(parallel)


def test_sweep_rejects_bad_input():
    with pytest.raises(InputError):
        ps_sweep(W1_5, [0], [], math.pi)
    with pytest.raises(InputError):
        ps_sweep(W1_5, [], [0.1], math.pi)
    with pytest.raises(DomainError):
        ps_sweep(W2_SPECTRUM, [-222], [0.1], math.pi)


# endregion

# region Scan


def test_scan_skips_mean_class():
    result = spectrum_scan(W1_4, math.pi)
    assert [c.value for c in result.skipped()] == [5]
    assert len(result.scanned()) == 10
    assert result.for_value(0).joint_count == 2
    assert result.for_value(3).joint_count == 4
    assert [(r.n_marked, r.k_grover) for r in result.grover_refs] == [(2, 2), (4, 1)]


def test_scan_entries_use_their_own_phase_scale():
    result = spectrum_scan(W1_5, math.pi, targets=[0, 3])
    first = result.for_value(0)
    assert first.ps == pytest.approx(math.pi / 7.5)
    assert first.sigma_ps == pytest.approx(W1_5.sigma_scaled(PhaseScale(math.pi / 7.5)))
    assert first.peak_prob > 2 / 32
    assert len(result.per_class) == 2
    with pytest.raises(KeyError):
        result.for_value(7)


def test_scan_without_peak_records_none(caplog):
    result = spectrum_scan(W1_5, math.pi, k_cap=1, targets=[0])
    entry = result.for_value(0)
    assert entry.peak_prob is None
    assert entry.k_peak is None
    assert "No peak" in caplog.text


# Joint C∪inverse first peaks of W1 at ps = π/(C̄ - C), with k_peak over the Grover reference for N_m=2
W1_FIRST_PEAKS = [
    pytest.param(10, 2, 50, 0.2655, 2.94, id="N10-C2"),
    pytest.param(20, 2, 613, 0.756, 1.079, id="N20-C2"),
    pytest.param(30, 2, 18810, 0.871, 1.034, id="N30-C2", marks=pytest.mark.slow),
    pytest.param(40, 2, 603510, 0.909, 1.036, id="N40-C2", marks=pytest.mark.slow),
    pytest.param(40, 0, 604015, 0.911, 1.037, id="N40-C0", marks=pytest.mark.slow),
]


@pytest.mark.parametrize("n_qubits, target, k_peak, peak_prob, ratio", W1_FIRST_PEAKS)
def test_w1_first_peak_against_grover_reference(n_qubits, target, k_peak, peak_prob, ratio):
    entry = spectrum_scan(build_spectrum(w1(n_qubits)), math.pi, targets=[target]).for_value(target)
    assert abs(entry.k_peak - k_peak) <= 1
    assert entry.peak_prob == pytest.approx(peak_prob, abs=1e-3)
    assert entry.k_peak / grover_k_reference(n_qubits, 2) == pytest.approx(ratio, abs=0.01)


def test_larger_register_is_more_grover_like():
    ten = spectrum_scan(build_spectrum(w1(10)), math.pi, targets=[2]).for_value(2)
    twenty = spectrum_scan(build_spectrum(w1(20)), math.pi, targets=[2]).for_value(2)
    assert twenty.peak_prob > ten.peak_prob


def test_extremal_peak_is_non_decreasing_in_register_size():
    peaks = [spectrum_scan(build_spectrum(w1(n)), math.pi, targets=[0]).for_value(0).peak_prob for n in (10, 14, 18)]
    assert all(p is not None for p in peaks)
    assert peaks[0] <= peaks[1] <= peaks[2]


def test_scan_is_deterministic():
    first = spectrum_scan(W1_5, math.pi)
    second = spectrum_scan(W1_5, math.pi)
    parallel = spectrum_scan(W1_5, math.pi, jobs=2)
    assert first == second == parallel
    assert scan_table(first).to_csv(index=False) == scan_table(parallel).to_csv(index=False)


# endregion

# region Phase-scale alignment


def test_small_register_resonance_is_off_the_predicted_phase_scale():
    spectrum = build_spectrum(w1(10))
    ps = ps_for_target(spectrum, 0).radians
    df = ps_sweep(spectrum, [0], ps_grid(0.8 * ps, 1.2 * ps, 41), math.pi, k_cap=2000)
    assert df["peak_prob"][20] == pytest.approx(0.277, abs=5e-3)
    assert df["peak_prob"].max() >= 0.44
    assert abs(int(df["peak_prob"].idxmax()) - 20) >= 2


@pytest.mark.slow
def test_w2_extremal_targets_resonate_at_predicted_phase_scale():
    targets = [c for c in range(-222, -208) if W2_SPECTRUM.count_of(c) > 0]
    assert -221 in targets and -222 not in targets
    for target in targets:
        ps = ps_for_target(W2_SPECTRUM, target).radians
        df = ps_sweep(W2_SPECTRUM, [target], ps_grid(0.8 * ps, 1.2 * ps, 41), math.pi, k_cap=10000)
        assert df["peak_prob"][20] >= 0.55, f"C={target}"
        assert abs(int(df["peak_prob"].idxmax()) - 20) <= 1, f"C={target}"


# endregion

# region Grover comparisons


def test_grover_k_reference():
    assert grover_k_reference(10, 2) == 17
    assert grover_k_reference(2, 1) == 1
    assert abs(grover_k_reference(40, 2) - round(math.pi / 4 * math.sqrt(2**39))) <= 1
    with pytest.raises(InputError):
        grover_k_reference(3, 0)


def test_grover_refs_margin():
    refs = grover_refs(10, [2])
    assert refs[0].k_grover == 17
    assert refs[0].k_plus_5pct == pytest.approx(17.85)


def test_grover_vs_cost_curves():
    df = grover_vs_cost_curves(w1(6), 0, 12)
    assert list(df.columns) == ["k", "cost", "grover"]
    assert len(df) == 13
    assert df["cost"][0] == pytest.approx(2 / 64)
    assert df["grover"][0] == pytest.approx(2 / 64)


# endregion
