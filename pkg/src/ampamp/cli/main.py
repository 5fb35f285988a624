"""Command-line entry point: `ampamp <subcommand> [flags]`.

Exit codes: 0 on success, 1 on invalid input or usage, 2 when a size guard trips.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from fractions import Fraction
from typing import Callable, Sequence

from ampamp.cli.run_config import LOG_LEVELS, RunConfig
from ampamp.domain.cost.cost_function import LinearCostFunction
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.cost.weight_sets import weight_set_from_name
from ampamp.domain.fidelity.experiment_spec import ExperimentSpec
from ampamp.domain.state.oracle_spec import OracleSpec
from ampamp.domain.state.target_selector import TargetSelector
from ampamp.errors import AmpampError, CapacityError, InputError, PeakNotFoundError
from ampamp.platform.analysis.grover_closed_form import resonance_curve
from ampamp.platform.analysis.param_engine import extremal_targets, grover_vs_cost_curves, ps_for_target, ps_grid, ps_sweep, spectrum_scan
from ampamp.platform.compiler.circuit_compiler import circuit_metrics, compile_cost_oracle_linear, compile_diffusion, compile_experiment, compile_grover_oracle
from ampamp.platform.compiler.dense_verifier import unitary_deviation, unitary_of_circuit
from ampamp.platform.compiler.qasm import emit_qasm, parse_qasm
from ampamp.platform.fidelity.f_metric import f_metric
from ampamp.platform.fidelity.synthesis import DEFAULT_SHOTS, synthesize_records
from ampamp.platform.io.json_files import read_records, read_weights, write_json, write_records, write_report
from ampamp.platform.io.tables import (
    complex_plane_table,
    grover_refs_table,
    members_table,
    read_spectrum_csv,
    scan_table,
    spectrum_table,
    sweep_table,
    trace_table,
    write_table,
)
from ampamp.platform.simulation.collective_simulator import check_phase_alignment, first_peak, run
from ampamp.platform.spectrum.spectrum_builder import build_spectrum_bruteforce, build_spectrum_dp
from ampamp.utils.math import to_fraction

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPACITY = 2

DEFAULT_RESONANCE_POINTS = 1001


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 instead of argparse's 2 (reserved for capacity errors)."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# region Argument parsing


def _grid(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid '{text}' is not of the form start,stop,count")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid '{text}' is not of the form start,stop,count") from None


def _values(text: str) -> list[Fraction]:
    try:
        return [to_fraction(part.strip()) for part in text.split(",") if part.strip()]
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _value(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except InputError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--log-level", default="WARNING", type=str.upper, choices=LOG_LEVELS, help="Logging level (default WARNING)")
    common.add_argument("--pi-units", action="store_true", help="Angle inputs are multiples of π")
    common.add_argument("--jobs", type=int, default=None, help="Worker processes (default $AMPAMP_JOBS or 1)")
    common.add_argument("--seed", type=int, default=0, help="Seed for sampling")
    common.add_argument("--out", default=".", help="Output directory (default: current directory)")

    source = _Parser(add_help=False)
    source.add_argument("--weights", help="Weight file: JSON {\"weights\": [...]}")
    source.add_argument("--set", dest="weight_set", help="Bundled weight set: W1, W2 or W3")
    source.add_argument("--n", type=int, help="Qubit count (for W1, --grover, resonance, compile, synth)")
    source.add_argument("--spectrum", help="Spectrum CSV written by `ampamp spectrum`")

    parser = _Parser(prog="ampamp", description="Amplitude amplification with cost oracles: spectra, simulation, analysis, circuits and fidelity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, source], help="Build a cost spectrum (C,count CSV)")
    method = p.add_mutually_exclusive_group()
    method.add_argument("--dp", dest="brute", action="store_false", help="Subset-sum counting (default)")
    method.add_argument("--brute", dest="brute", action="store_true", help="Enumerate all 2^N bitstrings (N <= 24)")
    p.add_argument("--members", action="store_true", help="Also write the bitstrings of every class")

    p = sub.add_parser("simulate", parents=[common, source], help="Iterate oracle + diffusion; trace and complex-plane CSVs")
    p.add_argument("--grover", type=int, metavar="N_M", help="Use the Grover oracle with N_M marked states (needs --n)")
    p.add_argument("--phi", type=float, help="Grover oracle phase (default π)")
    p.add_argument("--ps", type=float, help="Cost-oracle phase scale")
    p.add_argument("--target", type=_value, help="Target cost; sets p_s = π/(C̄ - target) when --ps is absent")
    p.add_argument("--theta", type=float, help="Diffusion angle (default π)")
    p.add_argument("--k", type=int, required=True, help="Iterations")
    p.add_argument("--stage", choices=("oracle", "diffusion"), default="oracle", help="State exported to the complex-plane CSV")
    p.add_argument("--check-phase", action="store_true", help="Require the π phase between ᾱ and the target for k <= 2")

    p = sub.add_parser("sweep", parents=[common, source], help="Peak joint probability over a p_s grid")
    p.add_argument("--targets", type=_values, help="Comma-separated target costs (use --targets=-222,-221 for negatives)")
    p.add_argument("--extremal", type=int, help="Use the COUNT lowest cost values as targets")
    p.add_argument("--ps-grid", type=_grid, required=True, help="start,stop,count")
    p.add_argument("--theta", type=float, help="Diffusion angle (default π)")
    p.add_argument("--k-cap", type=int, help="Iteration cap per point")

    p = sub.add_parser("scan", parents=[common, source], help="Peak probability and k of every class at its own p_s")
    p.add_argument("--theta", type=float, help="Diffusion angle (default π)")
    p.add_argument("--k-cap", type=int, help="Iteration cap per class")
    p.add_argument("--targets", type=_values, help="Restrict to these cost values")

    p = sub.add_parser("curves", parents=[common, source], help="Joint-target curve next to the matching Grover curve")
    p.add_argument("--target", type=_value, required=True, help="Target cost")
    p.add_argument("--k", type=int, required=True, help="Iterations")
    p.add_argument("--theta", type=float, help="Diffusion angle of the cost run (default π)")

    p = sub.add_parser("resonance", parents=[common], help="Peak |m⟩ probability versus oracle phase")
    p.add_argument("--n", type=int, required=True, help="Qubit count")
    p.add_argument("--theta", type=float, help="Diffusion angle (default π)")
    p.add_argument("--phi-grid", type=_grid, help=f"start,stop,count (default 0,2π,{DEFAULT_RESONANCE_POINTS})")

    p = sub.add_parser("compile", parents=[common, source], help="Compile a circuit to QASM plus metrics JSON")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--experiment", type=int, choices=(1, 2, 3), help="Experiment circuit")
    what.add_argument("--diffusion", action="store_true", help="Diffusion operator U_s(θ)")
    what.add_argument("--oracle", action="store_true", help="Cost oracle (with --weights/--set) or Grover oracle on |1…1⟩")
    p.add_argument("--param", type=float, default=None, help="p_s (exp 1, cost oracle), θ (exp 2/3, diffusion) or φ (Grover oracle)")
    p.add_argument("--scaled", action="store_true", help="Cost oracle angles W_i·π·p_s/N′")
    p.add_argument("--check", action="store_true", help="Re-parse the QASM and compare unitaries (N <= 10)")

    p = sub.add_parser("fidelity", parents=[common], help="Score measurement records (report JSON)")
    p.add_argument("--records", required=True, help="Record JSON file")

    p = sub.add_parser("synth", parents=[common], help="Sample synthetic measurement records")
    p.add_argument("--experiment", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--n", type=int, required=True, help="Qubit count")
    p.add_argument("--lambda", dest="noise_mix", type=float, default=0.0, help="Mix toward the uniform distribution, in [0, 1]")
    p.add_argument("--shots", type=int, default=DEFAULT_SHOTS)
    p.add_argument("--grid-points", type=int, default=100)

    return parser


# endregion

# region Shared helpers


def _theta(args: argparse.Namespace, config: RunConfig) -> float:
    return config.angle(args.theta) if args.theta is not None else math.pi


def _weight_set(args: argparse.Namespace) -> WeightSet | None:
    if args.weights:
        return read_weights(args.weights)
    if args.weight_set:
        return weight_set_from_name(args.weight_set, args.n)
    return None


def _spectrum(args: argparse.Namespace) -> CostSpectrum:
    if args.spectrum:
        return read_spectrum_csv(args.spectrum)
    w = _weight_set(args)
    if w is None:
        raise InputError(f"Cannot run `{args.command}` because no cost source was given; use --weights, --set or --spectrum")
    if getattr(args, "brute", False):
        return build_spectrum_bruteforce(LinearCostFunction(w), w.n_qubits)
    return build_spectrum_dp(w)


def _emit(path) -> None:
    print(path)


# endregion

# region Commands


def cmd_spectrum(args: argparse.Namespace, config: RunConfig) -> None:
    if args.spectrum:
        raise InputError("Cannot run `spectrum` from --spectrum; give --weights or --set")
    w = _weight_set(args)
    if w is None:
        raise InputError("Cannot run `spectrum` because no weights were given; use --weights or --set")

    spectrum = build_spectrum_bruteforce(LinearCostFunction(w), w.n_qubits) if args.brute else build_spectrum_dp(w)
    logger.info(f"Built {spectrum} for {w}")
    _emit(write_table(spectrum_table(spectrum), config.output("spectrum.csv")))
    if args.members:
        _emit(write_table(members_table(LinearCostFunction(w), spectrum), config.output("members.csv")))


def cmd_simulate(args: argparse.Namespace, config: RunConfig) -> None:
    theta = _theta(args, config)
    selector = None
    if args.grover is not None:
        if args.n is None:
            raise InputError("Cannot run `simulate --grover` because --n is missing")
        phi = config.angle(args.phi) if args.phi is not None else math.pi
        oracle = OracleSpec.grover(args.n, args.grover, phi)
        selector = TargetSelector.class_index(oracle.marked_index, "m")
    else:
        spectrum = _spectrum(args)
        if args.ps is not None:
            ps = config.angle(args.ps)
        elif args.target is not None:
            ps = ps_for_target(spectrum, args.target)
        else:
            raise InputError("Cannot run `simulate` because neither --ps nor --target was given")
        oracle = OracleSpec.cost(spectrum, ps)
        if args.target is not None:
            selector = TargetSelector.joint(spectrum, args.target)

    trace = run(oracle, theta, args.k)
    if selector is not None and args.k >= 2:
        try:
            peak = first_peak(trace, selector)
            logger.info(f"First peak of {selector.label}: k={peak.k}, p={peak.probability:.6f}")
        except PeakNotFoundError:
            logger.info(f"No peak of {selector.label} within {args.k} iteration(s)")
    if args.check_phase:
        if args.target is None:
            raise InputError("Cannot run `simulate --check-phase` without --target")
        check_phase_alignment(trace, args.target)

    _emit(write_table(trace_table(trace), config.output("trace.csv")))
    _emit(write_table(complex_plane_table(trace, args.stage), config.output("complex_plane.csv")))


def cmd_sweep(args: argparse.Namespace, config: RunConfig) -> None:
    spectrum = _spectrum(args)
    if args.targets:
        targets = args.targets
    elif args.extremal:
        targets = extremal_targets(spectrum, args.extremal)
    else:
        raise InputError("Cannot run `sweep` because neither --targets nor --extremal was given")

    start, stop, count = args.ps_grid
    grid = ps_grid(config.angle(start), config.angle(stop), count)
    sweep = ps_sweep(spectrum, targets, grid, _theta(args, config), args.k_cap, config.jobs)
    _emit(write_table(sweep_table(sweep), config.output("sweep.csv")))


def cmd_scan(args: argparse.Namespace, config: RunConfig) -> None:
    spectrum = _spectrum(args)
    scan = spectrum_scan(spectrum, _theta(args, config), args.k_cap, config.jobs, args.targets)
    _emit(write_table(scan_table(scan), config.output("scan.csv")))
    _emit(write_table(grover_refs_table(scan), config.output("grover_refs.csv")))


def cmd_curves(args: argparse.Namespace, config: RunConfig) -> None:
    w = _weight_set(args)
    if w is None:
        raise InputError("Cannot run `curves` because no weights were given; use --weights or --set")
    curves = grover_vs_cost_curves(w, args.target, args.k, _theta(args, config))
    _emit(write_table(curves, config.output("curves.csv")))


def cmd_resonance(args: argparse.Namespace, config: RunConfig) -> None:
    if args.phi_grid is None:
        grid = ps_grid(0.0, 2 * math.pi, DEFAULT_RESONANCE_POINTS)
    else:
        start, stop, count = args.phi_grid
        grid = ps_grid(config.angle(start), config.angle(stop), count)
    _emit(write_table(resonance_curve(args.n, _theta(args, config), grid), config.output("resonance.csv")))


def cmd_compile(args: argparse.Namespace, config: RunConfig) -> None:
    param = config.angle(args.param) if args.param is not None else math.pi
    if args.experiment is not None:
        if args.n is None:
            raise InputError("Cannot run `compile --experiment` because --n is missing")
        circuit = compile_experiment(args.experiment, args.n, param)
    elif args.diffusion:
        if args.n is None:
            raise InputError("Cannot run `compile --diffusion` because --n is missing")
        circuit = compile_diffusion(args.n, param)
    else:
        w = _weight_set(args)
        if w is not None:
            circuit = compile_cost_oracle_linear(w, param, scaled_by_n_prime=args.scaled)
        elif args.n is not None:
            circuit = compile_grover_oracle(args.n, param)
        else:
            raise InputError("Cannot run `compile --oracle` without --weights/--set (cost oracle) or --n (Grover oracle)")

    text = emit_qasm(circuit)
    qasm_path = config.output("circuit.qasm")
    qasm_path.parent.mkdir(parents=True, exist_ok=True)
    qasm_path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {circuit} to '{qasm_path}'")
    _emit(qasm_path)

    metrics: dict = circuit_metrics(circuit)
    if args.check:
        deviation = unitary_deviation(unitary_of_circuit(parse_qasm(text)), unitary_of_circuit(circuit))
        metrics["check_deviation"] = deviation
        logger.info(f"QASM round trip deviates by {deviation:.3e}")
    _emit(write_json(metrics, config.output("metrics.json")))


def cmd_fidelity(args: argparse.Namespace, config: RunConfig) -> None:
    spec, records = read_records(args.records)
    report = f_metric(spec, records)
    _emit(write_report(report, config.output("report.json")))


def cmd_synth(args: argparse.Namespace, config: RunConfig) -> None:
    spec = ExperimentSpec.default(args.experiment, args.n, args.grid_points)
    records = synthesize_records(spec, args.shots, args.noise_mix, config.seed)
    _emit(write_records(spec, records, config.output("records.json")))


_COMMANDS: dict[str, Callable[[argparse.Namespace, RunConfig], None]] = {
    "spectrum": cmd_spectrum,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "scan": cmd_scan,
    "curves": cmd_curves,
    "resonance": cmd_resonance,
    "compile": cmd_compile,
    "fidelity": cmd_fidelity,
    "synth": cmd_synth,
}


# endregion


def main(argv: Sequence[str] | None = None) -> int:
    """Parse $argv, run the subcommand and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(level=args.log_level, format=LOG_FORMAT, datefmt=LOG_DATE_FORMAT)
    try:
        config = RunConfig.from_namespace(args).validate()
        logger.info(f"Running `{config.command}` with output to '{config.out_dir}'")
        _COMMANDS[args.command](args, config)
    except CapacityError as e:
        print(f"ampamp: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (AmpampError, ValueError, OSError) as e:
        print(f"ampamp: {e}", file=sys.stderr)
        return EXIT_INPUT

    logger.info(f"Finished `{config.command}`")
    return EXIT_OK
