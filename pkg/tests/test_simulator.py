import math

import numpy as np
import pytest

from stimcheck import kernels
from stimcheck.circuit import Circuit, Gate, GateKind
from stimcheck.library import random_circuit
from stimcheck.oracle import build_unitary
from stimcheck.simulator import (
    StateVector,
    apply_gate,
    basis_state,
    fidelity,
    simulate,
    zero_state,
)
from stimcheck.stimuli import RandomSource

SQRT2_INV = 1 / math.sqrt(2)


def example3_circuit() -> Circuit:
    return Circuit(2, (Gate(GateKind.H, 1), Gate(GateKind.X, 0, controls=(1,))))


def test_zero_state_one_qubit():
    np.testing.assert_array_equal(zero_state(1).amplitudes, [1, 0])


def test_zero_state_two_qubits():
    np.testing.assert_array_equal(zero_state(2).amplitudes, [1, 0, 0, 0])


def test_zero_state_three_qubits():
    state = zero_state(3)
    assert len(state.amplitudes) == 8
    assert state.amplitudes[0] == 1


def test_zero_state_respects_maximum():
    with pytest.raises(ValueError):
        zero_state(25)
    with pytest.raises(ValueError):
        zero_state(9, max_qubits=8)


def test_h_on_q1_of_00():
    state = apply_gate(zero_state(2), Gate(GateKind.H, 1))
    np.testing.assert_allclose(state.amplitudes, [SQRT2_INV, 0, SQRT2_INV, 0])


def test_cnot_entangles():
    state = StateVector(2, np.array([SQRT2_INV, 0, SQRT2_INV, 0], dtype=complex))
    apply_gate(state, Gate(GateKind.X, 0, controls=(1,)))
    np.testing.assert_allclose(state.amplitudes, [SQRT2_INV, 0, 0, SQRT2_INV])


def test_x_flips_single_qubit():
    state = apply_gate(zero_state(1), Gate(GateKind.X, 0))
    np.testing.assert_array_equal(state.amplitudes, [0, 1])


def test_apply_gate_out_of_range():
    with pytest.raises(ValueError):
        apply_gate(zero_state(1), Gate(GateKind.X, 1))


def test_simulate_example3():
    out = simulate(example3_circuit(), zero_state(2))
    np.testing.assert_allclose(out.amplitudes, [SQRT2_INV, 0, 0, SQRT2_INV])


def test_simulate_empty_circuit_keeps_state():
    initial = simulate(example3_circuit(), zero_state(2))
    out = simulate(Circuit(2), initial)
    np.testing.assert_array_equal(out.amplitudes, initial.amplitudes)
    assert out.amplitudes is not initial.amplitudes


def test_simulate_qubit_mismatch():
    with pytest.raises(ValueError):
        simulate(Circuit(3), zero_state(2))


def test_fidelity_self_is_one():
    state = simulate(example3_circuit(), zero_state(2))
    assert abs(fidelity(state, state) - 1.0) < 1e-12


def test_fidelity_orthogonal_basis_states():
    assert fidelity(basis_state(1, 0), basis_state(1, 1)) == 0.0


def test_fidelity_of_00_with_bell_state():
    bell = StateVector(2, np.array([SQRT2_INV, 0, 0, SQRT2_INV], dtype=complex))
    # independent check: direct inner product on the raw arrays
    expected = abs(np.vdot(zero_state(2).amplitudes, bell.amplitudes)) ** 2
    assert math.isclose(fidelity(zero_state(2), bell), expected)
    assert math.isclose(fidelity(zero_state(2), bell), 0.5)


def test_fidelity_symmetry_and_phase_invariance():
    rng = RandomSource(17)
    for k in range(20):
        a = simulate(random_circuit(3, 20, rng.derive(k, 0)), zero_state(3))
        b = simulate(random_circuit(3, 20, rng.derive(k, 1)), zero_state(3))
        assert fidelity(a, b) == fidelity(b, a)
        theta = float(rng.gen.uniform(0, 2 * math.pi))
        rotated = StateVector(3, np.exp(1j * theta) * a.amplitudes)
        assert abs(fidelity(rotated, b) - fidelity(a, b)) < 1e-12


def test_fidelity_qubit_mismatch():
    with pytest.raises(ValueError):
        fidelity(zero_state(1), zero_state(2))


def test_norm_preserved_by_random_circuits():
    for k in range(30):
        circuit = random_circuit(5, 60, RandomSource(700 + k), with_rotations=True,
                                 with_toffoli=True)
        out = simulate(circuit, zero_state(5))
        assert abs(out.norm() - 1.0) < 1e-10


def test_simulator_matches_oracle_unitary():
    for k in range(20):
        n = 2 + k % 5
        circuit = random_circuit(n, 30, RandomSource(900 + k), with_rotations=True,
                                 with_toffoli=True)
        unitary = build_unitary(circuit)
        initial = simulate(random_circuit(n, 10, RandomSource(1000 + k)), zero_state(n))
        out = simulate(circuit, initial)
        np.testing.assert_allclose(out.amplitudes, unitary @ initial.amplitudes, atol=1e-10)


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.skipif("cython" not in kernels.available_backends(),
                    reason="compiled kernel not built")
def test_backends_agree():
    active = kernels.backend_name()
    circuit = random_circuit(6, 80, RandomSource(31), with_rotations=True, with_toffoli=True)
    results = {}
    try:
        for name in kernels.available_backends():
            kernels.use_backend(name)
            results[name] = simulate(circuit, zero_state(6)).amplitudes
    finally:
        kernels.use_backend(active)
    np.testing.assert_allclose(results["cython"], results["python"], atol=1e-13)
