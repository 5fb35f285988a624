"""OpenQASM 2 text for compiled circuits, and a parser for exactly that dialect."""

from __future__ import annotations

import logging
import re

from bidict import bidict

from ampamp.domain.circuit.circuit import Circuit
from ampamp.domain.circuit.gate import Gate, GateKind
from ampamp.errors import InputError

logger = logging.getLogger(__name__)

QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";'

_MNEMONICS: bidict[GateKind, str] = bidict(
    {
        GateKind.H: "h",
        GateKind.X: "x",
        GateKind.P: "p",
        GateKind.CX: "cx",
    }
)

_QREG = re.compile(r"^qreg\s+q\[(\d+)\];$")
_GATE = re.compile(r"^([a-z]+)(?:\(([^)]*)\))?\s+(q\[\d+\](?:\s*,\s*q\[\d+\])*);$")
_QUBIT = re.compile(r"q\[(\d+)\]")


def format_angle(angle: float) -> str:
    """17 significant digits, enough to reproduce the float exactly."""
    return format(angle, ".17g")


def emit_qasm(c: Circuit) -> str:
    """Deterministic QASM text: header, one `q` register, one line per gate."""
    lines = [QASM_HEADER, f"qreg q[{c.width}];"]
    for gate in c:
        mnemonic = _MNEMONICS[gate.kind]
        args = ",".join(f"q[{q}]" for q in gate.qubits)
        if gate.kind is GateKind.P:
            lines.append(f"{mnemonic}({format_angle(gate.angle)}) {args};")
        else:
            lines.append(f"{mnemonic} {args};")
    return "\n".join(lines) + "\n"


def parse_qasm(text: str) -> Circuit:
    """Parse text produced by `emit_qasm`.

    Raises:
        InputError: On a missing register, an unknown gate or a malformed line.
    """
    circuit: Circuit | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if not line or line.startswith("OPENQASM") or line.startswith("include"):
            continue

        register = _QREG.match(line)
        if register:
            if circuit is not None:
                raise InputError(f"QASM line {line_no}: only one qubit register is supported")
            circuit = Circuit(int(register.group(1)))
            continue

        match = _GATE.match(line)
        if match is None:
            raise InputError(f"QASM line {line_no}: cannot parse '{line}'")
        if circuit is None:
            raise InputError(f"QASM line {line_no}: gate before `qreg` declaration")

        mnemonic, angle_text, args = match.groups()
        kind = _MNEMONICS.inverse.get(mnemonic)
        if kind is None:
            raise InputError(f"QASM line {line_no}: gate '{mnemonic}' not found. Available gates: {sorted(_MNEMONICS.values())}")

        qubits = tuple(int(q) for q in _QUBIT.findall(args))
        angle = None
        if angle_text is not None:
            try:
                angle = float(angle_text)
            except ValueError:
                raise InputError(f"QASM line {line_no}: angle '{angle_text}' is not a number") from None
        circuit.append(Gate(kind, qubits, angle))

    if circuit is None:
        raise InputError("QASM text declares no qubit register")
    logger.debug(f"Parsed QASM into {circuit}")
    return circuit
