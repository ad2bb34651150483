#!/usr/bin/env python3
"""Compare the compiled gate-application kernel against the pure-NumPy
fallback on random circuits of growing width.

Usage: python3 benchmarks/kernel_benchmark.py [--max-qubits N] [--gates M] [--repeats R]
"""
from __future__ import annotations

import argparse
import time

from stimcheck import kernels
from stimcheck.library import random_circuit
from stimcheck.simulator import simulate, zero_state
from stimcheck.stimuli import RandomSource


def time_backend(name: str, num_qubits: int, num_gates: int, repeats: int) -> float:
    circuit = random_circuit(num_qubits, num_gates, RandomSource(1234, num_qubits),
                             with_rotations=True, with_toffoli=True)
    kernels.use_backend(name)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        simulate(circuit, zero_state(num_qubits))
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-qubits", type=int, default=20)
    parser.add_argument("--gates", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"available backends: {', '.join(backends)}")
    if "cython" not in backends:
        print("compiled kernel not built; nothing to compare")
        return

    active = kernels.backend_name()
    print(f"{'qubits':>6} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}")
    try:
        for n in range(4, args.max_qubits + 1, 2):
            t_py = time_backend("python", n, args.gates, args.repeats)
            t_cy = time_backend("cython", n, args.gates, args.repeats)
            print(f"{n:>6} {t_py:>12.6f} {t_cy:>12.6f} {t_py / t_cy:>7.2f}x")
    finally:
        kernels.use_backend(active)


if __name__ == "__main__":
    main()
