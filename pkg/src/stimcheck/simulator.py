"""Dense state-vector simulation: |0...0> preparation, gate application, fidelity.

Gates are applied in place with stride arithmetic on the amplitude array;
no 2^n x 2^n matrix is ever materialized.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .circuit import Circuit, Gate

MAX_QUBITS = 24


@dataclass
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))


def zero_state(num_qubits: int, max_qubits: int = MAX_QUBITS) -> StateVector:
    if num_qubits < 1:
        raise ValueError(f"num_qubits must be positive, got {num_qubits}")
    if num_qubits > max_qubits:
        raise ValueError(f"{num_qubits} qubits exceeds the configured maximum of {max_qubits}")
    amps = np.zeros(1 << num_qubits, dtype=complex)
    amps[0] = 1.0
    return StateVector(num_qubits, amps)


def basis_state(num_qubits: int, index: int, max_qubits: int = MAX_QUBITS) -> StateVector:
    state = zero_state(num_qubits, max_qubits)
    if not 0 <= index < (1 << num_qubits):
        raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def apply_gate(state: StateVector, gate: Gate) -> StateVector:
    """Apply one gate in place and return the (mutated) state."""
    if any(q >= state.num_qubits for q in gate.qubits):
        raise ValueError(f"gate {gate} out of range for {state.num_qubits} qubits")
    m = gate.matrix()
    control_mask = 0
    for c in gate.controls:
        control_mask |= 1 << c
    kernels.apply_2x2(
        state.amplitudes, state.num_qubits, gate.target, control_mask,
        m[0, 0], m[0, 1], m[1, 0], m[1, 1],
    )
    return state


def simulate(circuit: Circuit, initial: StateVector) -> StateVector:
    """Fold apply_gate over the circuit's gates; the initial state is not mutated."""
    if circuit.num_qubits != initial.num_qubits:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits but state has {initial.num_qubits}"
        )
    state = initial.copy()
    for gate in circuit.gates:
        apply_gate(state, gate)
    return state


def fidelity(a: StateVector, b: StateVector) -> float:
    """Squared overlap |<a|b>|^2, clamped to [0, 1] against rounding overshoot."""
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}")
    overlap = np.vdot(a.amplitudes, b.amplitudes)
    return min(max(float(abs(overlap) ** 2), 0.0), 1.0)
