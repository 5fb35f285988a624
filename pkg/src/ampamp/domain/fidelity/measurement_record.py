from __future__ import annotations

from typing import Mapping

from ampamp.errors import InputError


class MeasurementRecord:
    """Counts of one circuit run at one parameter value.

    Missing bitstrings are zero counts, and Σ counts may fall short of $shots; measured
    probabilities are always counts / shots.

    Attributes:
        param (float): Value of the varied parameter in radians.
        shots (int): Number of circuit executions.
        counts (dict[str, int]): Bitstring -> count; leftmost character is qubit q_1.
    """

    __slots__ = ("_param", "_shots", "_counts")

    def __init__(self, param: float, shots: int, counts: Mapping[str, int]):
        """Raises `InputError` for non-positive shots, negative counts, mixed bitstring lengths,
        non-binary keys or Σ counts > shots."""
        # Check: at least one shot
        if int(shots) < 1:
            raise InputError(f"Cannot call `MeasurementRecord.__init__` because $shots ({shots}) is not >= 1")

        clean: dict[str, int] = {}
        lengths = set()
        for key, value in counts.items():
            bitstring = str(key)
            if not bitstring or set(bitstring) - {"0", "1"}:
                raise InputError(f"Cannot call `MeasurementRecord.__init__` because count key '{bitstring}' is not a bitstring")
            if int(value) < 0:
                raise InputError(f"Cannot call `MeasurementRecord.__init__` because count of '{bitstring}' ({value}) is negative")
            lengths.add(len(bitstring))
            clean[bitstring] = int(value)

        # Check: all keys describe the same register
        if len(lengths) > 1:
            raise InputError(f"Cannot call `MeasurementRecord.__init__` because $counts mixes bitstring lengths {sorted(lengths)}")

        # Check: no more outcomes than shots
        total = sum(clean.values())
        if total > int(shots):
            raise InputError(f"Cannot call `MeasurementRecord.__init__` because Σ counts ({total}) > $shots ({shots})")

        self._param = float(param)
        self._shots = int(shots)
        self._counts = dict(sorted(clean.items()))

    @property
    def param(self) -> float:
        return self._param

    @property
    def shots(self) -> int:
        return self._shots

    @property
    def counts(self) -> dict[str, int]:
        return dict(self._counts)

    @property
    def n_qubits(self) -> int | None:
        """Bitstring length, None for an empty counts map."""
        return len(next(iter(self._counts))) if self._counts else None

    def count_of(self, bitstring: str) -> int:
        return self._counts.get(bitstring, 0)

    def to_dict(self) -> dict:
        return {"param": self._param, "shots": self._shots, "counts": dict(self._counts)}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(param={self._param!r}, shots={self._shots}, counts={self._counts!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, MeasurementRecord):
            return False
        return self._param == other._param and self._shots == other._shots and self._counts == other._counts
