import itertools
import math

import numpy as np
import pytest

from stimcheck.circuit import Circuit, Gate, GateKind
from stimcheck.qasm import emit_qasm
from stimcheck.simulator import simulate, zero_state
from stimcheck.stimuli import (
    CLASSICAL,
    CLIFFORD_1Q_WORDS,
    LOCAL,
    LOCAL_PREP_WORDS,
    RandomSource,
    Scheme,
    gen_classical,
    gen_global,
    gen_local,
    global_scheme,
    next_stimulus,
)

SQRT2_INV = 1 / math.sqrt(2)

# Expected six single-qubit states, in the order of LOCAL_PREP_WORDS.
SIX_STATES = (
    np.array([1, 0], dtype=complex),                     # |0>
    np.array([0, 1], dtype=complex),                     # |1>
    np.array([SQRT2_INV, SQRT2_INV]),                    # |+>
    np.array([SQRT2_INV, -SQRT2_INV]),                   # |->
    np.array([SQRT2_INV, 1j * SQRT2_INV]),               # |up>
    np.array([SQRT2_INV, -1j * SQRT2_INV]),              # |down>
)


def prep_state(word, num_qubits=1, qubit=0):
    circuit = Circuit(num_qubits, tuple(Gate(kind, qubit) for kind in word))
    return simulate(circuit, zero_state(num_qubits)).amplitudes


class TestScheme:
    def test_known_kinds(self):
        assert CLASSICAL.kind == "classical"
        assert LOCAL.kind == "local"
        assert global_scheme(3).layers == 3

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Scheme("thermal")

    def test_layers_only_for_global(self):
        with pytest.raises(ValueError):
            Scheme("local", layers=2)

    def test_nonpositive_layers_rejected(self):
        with pytest.raises(ValueError):
            global_scheme(0)


class TestRandomSource:
    def test_same_seed_same_draws(self):
        a = RandomSource(5).gen.integers(0, 1000, size=10)
        b = RandomSource(5).gen.integers(0, 1000, size=10)
        np.testing.assert_array_equal(a, b)

    def test_derive_is_reproducible_and_independent(self):
        a = RandomSource(5).derive(1, 2)
        b = RandomSource(5).derive(1, 2)
        c = RandomSource(5).derive(1, 3)
        xs = a.gen.integers(0, 2**30, size=8)
        np.testing.assert_array_equal(xs, b.gen.integers(0, 2**30, size=8))
        assert not np.array_equal(xs, c.gen.integers(0, 2**30, size=8))

    def test_label(self):
        assert RandomSource(5).derive(1, 2).label == "5:1:2"


class TestLocalPrepWords:
    def test_words_prepare_expected_states(self):
        for word, expected in zip(LOCAL_PREP_WORDS, SIX_STATES):
            state = prep_state(word)
            # equal up to global phase
            assert abs(abs(np.vdot(expected, state)) - 1.0) < 1e-12

    def test_pairwise_overlaps(self):
        # |<a|b>|^2 is 1 on the diagonal, 0 for antipodal pairs, 1/2 otherwise
        states = [prep_state(w) for w in LOCAL_PREP_WORDS]
        for i, a in enumerate(states):
            for j, b in enumerate(states):
                overlap = abs(np.vdot(a, b)) ** 2
                if i == j:
                    expected = 1.0
                elif i // 2 == j // 2:  # {0,1}, {+,-}, {up,down} are antipodal
                    expected = 0.0
                else:
                    expected = 0.5
                assert abs(overlap - expected) < 1e-12, (i, j, overlap)


class TestClifford1qWords:
    def test_count(self):
        assert len(CLIFFORD_1Q_WORDS) == 24

    def test_words_are_distinct_operations(self):
        h = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
        s = np.array([[1, 0], [0, 1j]], dtype=complex)
        mats = []
        for word in CLIFFORD_1Q_WORDS:
            m = np.eye(2, dtype=complex)
            for kind in word:
                m = (h if kind == GateKind.H else s) @ m
            mats.append(m)
        for i, a in enumerate(mats):
            for j, b in enumerate(mats):
                same = abs(abs(np.trace(a.conj().T @ b)) - 2.0) < 1e-9
                assert same == (i == j)

    def test_words_are_short(self):
        assert max(len(w) for w in CLIFFORD_1Q_WORDS) <= 6


class TestClassical:
    def test_only_x_gates_and_basis_output(self):
        for k in range(50):
            stim = gen_classical(4, RandomSource(100, k))
            assert all(g.kind == GateKind.X and not g.controls for g in stim.prep.gates)
            amps = simulate(stim.prep, zero_state(4)).amplitudes
            assert np.count_nonzero(amps) == 1

    def test_uniform_over_basis_states(self):
        n, draws = 3, 4000
        counts = np.zeros(2**n)
        for k in range(draws):
            stim = gen_classical(n, RandomSource(7, k))
            amps = simulate(stim.prep, zero_state(n)).amplitudes
            counts[int(np.argmax(np.abs(amps)))] += 1
        p = 1 / 2**n
        sigma = math.sqrt(draws * p * (1 - p))
        assert np.all(np.abs(counts - draws * p) < 4 * sigma)

    def test_determinism(self):
        a = gen_classical(5, RandomSource(9, 1))
        b = gen_classical(5, RandomSource(9, 1))
        assert emit_qasm(a.prep) == emit_qasm(b.prep)


class TestLocal:
    def test_product_of_six_states(self):
        for k in range(30):
            stim = gen_local(3, RandomSource(11, k))
            amps = simulate(stim.prep, zero_state(3)).amplitudes
            # every amplitude magnitude is a power of 1/sqrt(2)
            mags = np.abs(amps[np.abs(amps) > 1e-12])
            for m in mags:
                assert abs(math.log2(m) * 2 - round(math.log2(m) * 2)) < 1e-9

    def test_all_36_products_reachable_at_n2(self):
        seen = set()
        expected = set()
        for i, j in itertools.product(range(6), range(6)):
            target = np.kron(SIX_STATES[j], SIX_STATES[i])  # q1 (x) q0
            expected.add((i, j))
            for k in range(2000):
                if (i, j) in seen:
                    break
                stim = gen_local(2, RandomSource(13, k))
                amps = simulate(stim.prep, zero_state(2)).amplitudes
                if abs(abs(np.vdot(target, amps)) - 1.0) < 1e-9:
                    seen.add((i, j))
        assert seen == expected

    def test_determinism(self):
        a = gen_local(6, RandomSource(21, 4))
        b = gen_local(6, RandomSource(21, 4))
        assert emit_qasm(a.prep) == emit_qasm(b.prep)


class TestGlobal:
    def test_single_qubit_has_no_cnots(self):
        stim = gen_global(1, 3, RandomSource(31))
        assert all(not g.controls for g in stim.prep.gates)

    def test_gate_kinds_restricted_to_h_s_cx(self):
        stim = gen_global(4, 4, RandomSource(33))
        for g in stim.prep.gates:
            if g.controls:
                assert g.kind == GateKind.X and len(g.controls) == 1
            else:
                assert g.kind in (GateKind.H, GateKind.S)

    def test_gate_count_bounds(self):
        n, layers = 5, 3
        stim = gen_global(n, layers, RandomSource(35))
        max_word = max(len(w) for w in CLIFFORD_1Q_WORDS)
        upper = layers * 2 * (n * max_word + n // 2)
        assert stim.prep.gate_count <= upper

    def test_outputs_are_stabilizer_states(self):
        # amplitudes of H/S/CNOT circuits on |0...0> have magnitude 0 or 2^(-k/2)
        for k in range(20):
            stim = gen_global(3, 3, RandomSource(37, k))
            amps = simulate(stim.prep, zero_state(3)).amplitudes
            mags = np.abs(amps[np.abs(amps) > 1e-9])
            assert np.allclose(mags, mags[0], atol=1e-9)

    def test_layer_validation(self):
        with pytest.raises(ValueError):
            gen_global(2, 0, RandomSource(0))

    def test_determinism(self):
        a = gen_global(4, 4, RandomSource(41, 2))
        b = gen_global(4, 4, RandomSource(41, 2))
        assert emit_qasm(a.prep) == emit_qasm(b.prep)


class TestNextStimulus:
    def test_dispatch(self):
        rng = RandomSource(50)
        assert next_stimulus(CLASSICAL, 3, rng.derive(0)).scheme == CLASSICAL
        assert next_stimulus(LOCAL, 3, rng.derive(1)).scheme == LOCAL
        stim = next_stimulus(global_scheme(), 3, rng.derive(2))
        assert stim.scheme == global_scheme(3)  # default: one layer per qubit

    def test_seed_tag_passthrough(self):
        stim = next_stimulus(CLASSICAL, 2, RandomSource(51), seed_tag="51:0")
        assert stim.seed_tag == "51:0"
