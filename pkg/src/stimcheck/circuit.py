"""Circuit intermediate representation and gate matrix semantics.

Circuits are immutable: a fixed qubit count plus an ordered gate sequence.
Controlled gates are stored as (controls, target) on a single-qubit base
kind; a circuit's overall unitary is the ordered product of its gates'
(control-expanded) matrices, last gate leftmost.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

_SQRT2_INV = 1.0 / math.sqrt(2.0)


class GateKind(Enum):
    I = "id"
    X = "x"
    Y = "y"
    Z = "z"
    H = "h"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    RX = "rx"
    RY = "ry"
    RZ = "rz"
    PHASE = "u1"
    U3 = "u3"

    @property
    def num_params(self) -> int:
        if self in (GateKind.RX, GateKind.RY, GateKind.RZ, GateKind.PHASE):
            return 1
        if self is GateKind.U3:
            return 3
        return 0


_FIXED_MATRICES = {
    GateKind.I: np.eye(2, dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.H: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT2_INV,
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, np.exp(-1j * math.pi / 4)]], dtype=complex),
}


def base_matrix(kind: GateKind, params: tuple[float, ...] = ()) -> np.ndarray:
    """2x2 unitary for a gate kind. Controls are applied by the simulator."""
    if len(params) != kind.num_params:
        raise ValueError(f"{kind.name} takes {kind.num_params} parameter(s), got {len(params)}")
    if not all(math.isfinite(p) for p in params):
        raise ValueError(f"non-finite parameter in {params}")
    if kind in _FIXED_MATRICES:
        return _FIXED_MATRICES[kind].copy()
    if kind is GateKind.RX:
        (t,) = params
        c, s = math.cos(t / 2), math.sin(t / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind is GateKind.RY:
        (t,) = params
        c, s = math.cos(t / 2), math.sin(t / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind is GateKind.RZ:
        (t,) = params
        return np.array([[np.exp(-1j * t / 2), 0], [0, np.exp(1j * t / 2)]], dtype=complex)
    if kind is GateKind.PHASE:
        (lam,) = params
        return np.array([[1, 0], [0, np.exp(1j * lam)]], dtype=complex)
    # U3(theta, phi, lam), qelib1 convention
    t, phi, lam = params
    c, s = math.cos(t / 2), math.sin(t / 2)
    return np.array(
        [[c, -np.exp(1j * lam) * s], [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c]],
        dtype=complex,
    )


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    target: int
    controls: tuple[int, ...] = ()
    params: tuple[float, ...] = ()

    def __post_init__(self):
        qubits = (*self.controls, self.target)
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"controls and target must be distinct: {qubits}")
        if any(q < 0 for q in qubits):
            raise ValueError(f"negative qubit index: {qubits}")
        if len(self.params) != self.kind.num_params:
            raise ValueError(
                f"{self.kind.name} takes {self.kind.num_params} parameter(s), got {len(self.params)}"
            )

    @property
    def qubits(self) -> tuple[int, ...]:
        return (*self.controls, self.target)

    def matrix(self) -> np.ndarray:
        return base_matrix(self.kind, self.params)


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...] = ()
    # label only; equality is structural (same qubit count, same gate sequence)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be positive, got {self.num_qubits}")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(q >= self.num_qubits for q in g.qubits):
                raise ValueError(f"gate {g} out of range for {self.num_qubits} qubits")

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def appended(self, *gates: Gate) -> "Circuit":
        return Circuit(self.num_qubits, self.gates + tuple(gates), self.name)

    def prepended(self, *gates: Gate) -> "Circuit":
        return Circuit(self.num_qubits, tuple(gates) + self.gates, self.name)


def gate_count(circuit: Circuit) -> int:
    return circuit.gate_count
