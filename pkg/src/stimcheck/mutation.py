"""Error injection: produce faulty realizations from a specification circuit."""
from __future__ import annotations

from enum import Enum

from .circuit import Circuit, Gate, GateKind
from .oracle import ORACLE_LIMIT, avg_fidelity, build_unitary
from .stimuli import RandomSource

EQUIVALENCE_MARGIN = 1e-10
TOFFOLI_COUNT = 10

INSERT_KINDS = (GateKind.X, GateKind.Y, GateKind.Z, GateKind.H, GateKind.S, GateKind.T)


class MutationError(ValueError):
    """The error option cannot be applied to this circuit (unusable instance)."""


class ErrorOption(Enum):
    REMOVE_1 = ("remove", 1)
    REMOVE_2 = ("remove", 2)
    REMOVE_3 = ("remove", 3)
    INSERT_1 = ("insert", 1)
    INSERT_2 = ("insert", 2)
    INSERT_3 = ("insert", 3)
    TOFFOLI_PREFIX = ("toffoli_prefix", TOFFOLI_COUNT)
    TOFFOLI_SUFFIX = ("toffoli_suffix", TOFFOLI_COUNT)

    @property
    def action(self) -> str:
        return self.value[0]

    @property
    def count(self) -> int:
        return self.value[1]

    @property
    def label(self) -> str:
        if self.action in ("remove", "insert"):
            return f"{self.action}_{self.count}"
        return self.action


def _random_toffolis(num_qubits: int, rng: RandomSource) -> list[Gate]:
    gates = []
    for _ in range(TOFFOLI_COUNT):
        a, b, t = (int(q) for q in rng.gen.choice(num_qubits, size=3, replace=False))
        gates.append(Gate(GateKind.X, t, controls=(a, b)))
    return gates


def mutate(circuit: Circuit, option: ErrorOption, rng: RandomSource) -> Circuit:
    """Apply one error-injection option; the input circuit is unchanged."""
    m = circuit.gate_count
    n = circuit.num_qubits
    name = f"{circuit.name}+{option.label}" if circuit.name else option.label

    if option.action == "remove":
        k = option.count
        if m < k:
            raise MutationError(f"cannot remove {k} gates from a {m}-gate circuit")
        positions = set(int(p) for p in rng.gen.choice(m, size=k, replace=False))
        gates = tuple(g for i, g in enumerate(circuit.gates) if i not in positions)
        return Circuit(n, gates, name)

    if option.action == "insert":
        gates = list(circuit.gates)
        for _ in range(option.count):
            kind = INSERT_KINDS[rng.gen.integers(0, len(INSERT_KINDS))]
            qubit = int(rng.gen.integers(0, n))
            position = int(rng.gen.integers(0, len(gates) + 1))
            gates.insert(position, Gate(kind, qubit))
        return Circuit(n, tuple(gates), name)

    # Toffoli prefix/suffix
    if n < 3:
        raise MutationError(f"Toffoli injection needs at least 3 qubits, circuit has {n}")
    toffolis = _random_toffolis(n, rng)
    if option.action == "toffoli_prefix":
        return Circuit(n, tuple(toffolis) + circuit.gates, name)
    return Circuit(n, circuit.gates + tuple(toffolis), name)


def is_functional_mutation(
    spec: Circuit, mutated: Circuit, limit: int = ORACLE_LIMIT
) -> bool | None:
    """True if the mutation changed the circuit's functionality, judged by the
    oracle's average gate fidelity. None when the circuit is too large to check."""
    if spec.num_qubits != mutated.num_qubits:
        return True
    if spec.num_qubits > limit:
        return None
    f = avg_fidelity(build_unitary(spec, limit), build_unitary(mutated, limit))
    return f < 1.0 - EQUIVALENCE_MARGIN
