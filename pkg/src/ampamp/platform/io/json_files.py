"""JSON files: weight sets, measurement records, fidelity reports and circuit metrics."""

from __future__ import annotations

import json
import logging
from decimal import Decimal
from pathlib import Path
from typing import Any

from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.fidelity.experiment_spec import DEFAULT_GRID_POINTS, ExperimentSpec
from ampamp.domain.fidelity.fidelity_report import FidelityReport
from ampamp.domain.fidelity.measurement_record import MeasurementRecord
from ampamp.errors import InputError

logger = logging.getLogger(__name__)

_RECORD_KEYS = {"param", "shots", "counts"}


def write_json(data: Any, path: str | Path) -> Path:
    """Deterministic JSON (`sort_keys`, `indent=2`)."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(f"Wrote '{target}'")
    return target


def _load(path: str | Path) -> Any:
    try:
        # Decimal keeps written decimals exact until they become Fractions
        return json.loads(Path(path).read_text(encoding="utf-8"), parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise InputError(f"File '{path}' is not valid JSON: {e}") from e


# region Weights


def read_weights(path: str | Path) -> WeightSet:
    """Read `{"weights": [...]}`; entries are integers, decimals or decimal strings.

    Raises:
        InputError: If the `weights` key is missing or holds a non-numeric entry.
    """
    data = _load(path)
    if not isinstance(data, dict) or "weights" not in data:
        raise InputError(f"Weight file '{path}' has no 'weights' key")
    name = data.get("name")
    return WeightSet(data["weights"], name=str(name) if name is not None else Path(path).stem)


def write_weights(w: WeightSet, path: str | Path) -> Path:
    data: dict[str, Any] = {"weights": [str(x) if x.denominator != 1 else int(x) for x in w.weights]}
    if w.name is not None:
        data["name"] = w.name
    return write_json(data, path)


# endregion

# region Records


def write_records(spec: ExperimentSpec, records: list[MeasurementRecord], path: str | Path) -> Path:
    """Write a header object followed by one object per record, as one JSON array."""
    header = {"experiment": int(spec.kind), "n_qubits": spec.n_qubits, "grid": [float(g) for g in spec.grid]}
    return write_json([header, *[r.to_dict() for r in records]], path)


def read_records(path: str | Path) -> tuple[ExperimentSpec, list[MeasurementRecord]]:
    """Read a record file.

    The header is the first array element and holds `experiment` and `n_qubits`; an optional
    `grid` (explicit values) or `grid_points` (default grid size, 100) fixes the grid records
    are validated against.

    Raises:
        InputError: On a missing header, missing record keys or malformed values.
    """
    data = _load(path)
    if not isinstance(data, list) or not data or not isinstance(data[0], dict) or "experiment" not in data[0]:
        raise InputError(f"Record file '{path}' does not start with a header object holding 'experiment' and 'n_qubits'")

    header, entries = data[0], data[1:]
    try:
        kind, n_qubits = int(header["experiment"]), int(header["n_qubits"])
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"Record file '{path}' has an invalid header {header!r}") from e

    if "grid" in header:
        spec = ExperimentSpec(kind, n_qubits, [float(g) for g in header["grid"]])
    else:
        spec = ExperimentSpec.default(kind, n_qubits, int(header.get("grid_points", DEFAULT_GRID_POINTS)))

    records = []
    for position, entry in enumerate(entries, start=1):
        if not isinstance(entry, dict) or not _RECORD_KEYS <= entry.keys():
            raise InputError(f"Record #{position} in '{path}' needs keys {sorted(_RECORD_KEYS)}")
        unknown = entry.keys() - _RECORD_KEYS
        if unknown:
            logger.warning(f"Ignoring unknown key(s) {sorted(unknown)} in record #{position} of '{path}'")
        records.append(MeasurementRecord(float(entry["param"]), int(entry["shots"]), entry["counts"]))

    logger.info(f"Read {len(records)} record(s) for {spec} from '{path}'")
    return spec, records


# endregion


def write_report(report: FidelityReport, path: str | Path) -> Path:
    return write_json(report.to_dict(), path)
