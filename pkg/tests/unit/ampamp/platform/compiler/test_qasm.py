import math

import pytest

from ampamp.domain.circuit.circuit import Circuit
from ampamp.domain.circuit.gate import Gate
from ampamp.errors import InputError
from ampamp.platform.compiler.circuit_compiler import compile_experiment
from ampamp.platform.compiler.qasm import QASM_HEADER, emit_qasm, format_angle, parse_qasm


def test_single_hadamard():
    assert emit_qasm(Circuit(1, [Gate.h(0)])) == f"{QASM_HEADER}\nqreg q[1];\nh q[0];\n"


def test_gate_lines():
    text = emit_qasm(Circuit(2, [Gate.x(1), Gate.cx(0, 1), Gate.p(0, 0.25)]))
    assert text.splitlines()[-3:] == ["x q[1];", "cx q[0],q[1];", "p(0.25) q[0];"]


def test_angle_is_exact():
    assert float(format_angle(math.pi / 7)) == math.pi / 7


def test_parse_emitted_experiment():
    circuit = compile_experiment(2, 3, 1.3)
    assert parse_qasm(emit_qasm(circuit)) == circuit


def test_parse_ignores_comments_and_blank_lines():
    text = f"{QASM_HEADER}\n\nqreg q[2]; // two qubits\nh q[1];\n"
    assert parse_qasm(text) == Circuit(2, [Gate.h(1)])


@pytest.mark.parametrize(
    "body",
    [
        "h q[0];",  # no register
        "qreg q[1];\nrz(0.1) q[0];",  # unknown gate
        "qreg q[1];\np(abc) q[0];",  # bad angle
        "qreg q[1];\nh q[0]",  # missing semicolon
        "qreg q[1];\nqreg q[1];",  # second register
        "qreg q[1];\nh q[3];",  # qubit out of range
    ],
)
def test_parse_errors(body):
    with pytest.raises(InputError):
        parse_qasm(f"{QASM_HEADER}\n{body}\n")
