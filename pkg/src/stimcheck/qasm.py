"""OpenQASM 2.0 subset: one quantum register, qelib1 gate spellings.

Supported statements: the OPENQASM 2.0 header, an optional qelib1 include,
a single qreg declaration, and gate applications drawn from
{id, x, y, z, h, s, sdg, t, tdg, rx, ry, rz, u1, u2, u3, cx, ccx}.
Angle expressions allow numeric literals, pi, unary minus, and * /.
Anything else is a parse error.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .circuit import Circuit, Gate, GateKind


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class QasmError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*)
  | (?P<number>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_.]*)
  | (?P<string>"[^"]*")
  | (?P<punct>[;,\[\]()*/\-])
    """,
    re.VERBOSE,
)

# (kind, qubit arity, param arity); cx/ccx map onto controlled X
_GATE_TABLE = {
    "id": (GateKind.I, 1, 0),
    "x": (GateKind.X, 1, 0),
    "y": (GateKind.Y, 1, 0),
    "z": (GateKind.Z, 1, 0),
    "h": (GateKind.H, 1, 0),
    "s": (GateKind.S, 1, 0),
    "sdg": (GateKind.SDG, 1, 0),
    "t": (GateKind.T, 1, 0),
    "tdg": (GateKind.TDG, 1, 0),
    "rx": (GateKind.RX, 1, 1),
    "ry": (GateKind.RY, 1, 1),
    "rz": (GateKind.RZ, 1, 1),
    "u1": (GateKind.PHASE, 1, 1),
    "u2": (GateKind.U3, 1, 2),
    "u3": (GateKind.U3, 1, 3),
    "cx": (GateKind.X, 2, 0),
    "ccx": (GateKind.X, 3, 0),
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise QasmError(ParseDiagnostic(line, col, f"unexpected character {source[pos]!r}"))
        kind = m.lastgroup
        text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise QasmError(ParseDiagnostic(tok.line, tok.column, message))

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            self.fail(f"expected {want!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def parse(self) -> Circuit:
        self.expect("name", "OPENQASM")
        version = self.expect("number")
        if version.text != "2.0":
            self.fail("only OPENQASM 2.0 is supported", version)
        self.expect("punct", ";")
        if self.peek().kind == "name" and self.peek().text == "include":
            self.advance()
            inc = self.expect("string")
            if inc.text != '"qelib1.inc"':
                self.fail("only qelib1.inc may be included", inc)
            self.expect("punct", ";")

        reg_name, num_qubits = self.parse_qreg()
        gates: list[Gate] = []
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "name" and tok.text == "qreg":
                self.fail("multiple quantum registers are not supported", tok)
            gates.append(self.parse_gate(reg_name, num_qubits))
        return Circuit(num_qubits, tuple(gates), name=reg_name)

    def parse_qreg(self) -> tuple[str, int]:
        self.expect("name", "qreg")
        reg = self.expect("name")
        self.expect("punct", "[")
        size = self.expect("number")
        if not size.text.isdigit() or int(size.text) < 1:
            self.fail("register size must be a positive integer", size)
        self.expect("punct", "]")
        self.expect("punct", ";")
        return reg.text, int(size.text)

    def parse_gate(self, reg_name: str, num_qubits: int) -> Gate:
        tok = self.expect("name")
        entry = _GATE_TABLE.get(tok.text)
        if entry is None:
            self.fail(f"unknown gate {tok.text!r}", tok)
        kind, qubit_arity, param_arity = entry
        params: tuple[float, ...] = ()
        if param_arity:
            self.expect("punct", "(")
            values = [self.parse_angle()]
            while self.peek().text == ",":
                self.advance()
                values.append(self.parse_angle())
            self.expect("punct", ")")
            if len(values) != param_arity:
                self.fail(f"{tok.text} takes {param_arity} parameter(s), got {len(values)}", tok)
            if tok.text == "u2":  # u2(phi, lam) = u3(pi/2, phi, lam)
                values = [math.pi / 2, *values]
            params = tuple(values)
        qubits = [self.parse_qubit(reg_name, num_qubits)]
        while self.peek().text == ",":
            self.advance()
            qubits.append(self.parse_qubit(reg_name, num_qubits))
        self.expect("punct", ";")
        if len(qubits) != qubit_arity:
            self.fail(f"{tok.text} takes {qubit_arity} qubit(s), got {len(qubits)}", tok)
        if len(set(qubits)) != len(qubits):
            self.fail(f"duplicate qubit argument in {tok.text}", tok)
        *controls, target = qubits
        return Gate(kind, target, tuple(controls), params)

    def parse_qubit(self, reg_name: str, num_qubits: int) -> int:
        tok = self.expect("name")
        if tok.text != reg_name:
            self.fail(f"unknown register {tok.text!r}", tok)
        self.expect("punct", "[")
        idx = self.expect("number")
        if not idx.text.isdigit():
            self.fail("qubit index must be an integer", idx)
        index = int(idx.text)
        if index >= num_qubits:
            self.fail(f"qubit index {index} out of range for {reg_name}[{num_qubits}]", idx)
        self.expect("punct", "]")
        return index

    def parse_angle(self) -> float:
        value = self.parse_factor()
        while self.peek().text in ("*", "/"):
            op = self.advance().text
            rhs = self.parse_factor()
            if op == "*":
                value *= rhs
            else:
                value /= rhs
        return value

    def parse_factor(self) -> float:
        sign = 1.0
        while self.peek().text == "-":
            self.advance()
            sign = -sign
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return sign * float(tok.text)
        if tok.kind == "name" and tok.text == "pi":
            self.advance()
            return sign * math.pi
        self.fail(f"expected a number or pi, found {tok.text or 'end of input'!r}")


def parse_qasm(source: str) -> Circuit:
    """Parse the QASM subset. Raises QasmError carrying a ParseDiagnostic."""
    return _Parser(_tokenize(source)).parse()


_EMIT_NAMES = {
    GateKind.I: "id",
    GateKind.X: "x",
    GateKind.Y: "y",
    GateKind.Z: "z",
    GateKind.H: "h",
    GateKind.S: "s",
    GateKind.SDG: "sdg",
    GateKind.T: "t",
    GateKind.TDG: "tdg",
    GateKind.RX: "rx",
    GateKind.RY: "ry",
    GateKind.RZ: "rz",
    GateKind.PHASE: "u1",
    GateKind.U3: "u3",
}


def emit_qasm(circuit: Circuit) -> str:
    """Serialize a circuit; parse_qasm(emit_qasm(c)) is structurally equal to c."""
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circuit.num_qubits}];"]
    for gate in circuit.gates:
        if gate.controls:
            if gate.kind is not GateKind.X or len(gate.controls) > 2:
                raise ValueError(f"no QASM spelling for controlled {gate.kind.name} gate: {gate}")
            name = "cx" if len(gate.controls) == 1 else "ccx"
        else:
            name = _EMIT_NAMES[gate.kind]
        args = ",".join(f"q[{q}]" for q in gate.qubits)
        if gate.params:
            params = ",".join(repr(p) for p in gate.params)
            lines.append(f"{name}({params}) {args};")
        else:
            lines.append(f"{name} {args};")
    return "\n".join(lines) + "\n"
