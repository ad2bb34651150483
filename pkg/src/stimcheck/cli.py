"""Command-line front end.

Subcommands: verify, bench, mutate, gen-circuits, oracle-check.
Exit codes for verify: 0 = no discrepancy found, 1 = error detected,
2 = usage/IO/parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import BenchmarkConfig, run_benchmark, write_csv
from .circuit import Circuit
from .equivalence import Verdict, VerificationConfig, verify
from .library import ghz, qft, random_circuit
from .mutation import ErrorOption, MutationError, mutate
from .oracle import (
    OMEGA_LIMIT,
    ORACLE_LIMIT,
    avg_fidelity,
    build_unitary,
    ent_fidelity,
    ent_fidelity_via_omega,
    mean_local_fidelity,
)
from .qasm import QasmError, emit_qasm, parse_qasm
from .stimuli import CLASSICAL, LOCAL, RandomSource, Scheme, global_scheme

EXIT_OK = 0
EXIT_DETECTED = 1
EXIT_ERROR = 2

_OPTION_BY_LABEL = {opt.label: opt for opt in ErrorOption}


def _load_circuit(path: str) -> Circuit:
    text = Path(path).read_text()
    circuit = parse_qasm(text)
    return Circuit(circuit.num_qubits, circuit.gates, name=Path(path).stem)


def _scheme_from_args(name: str, layers: int | None) -> Scheme:
    if name == "classical":
        return CLASSICAL
    if name == "local":
        return LOCAL
    if name == "global":
        return global_scheme(layers)
    raise ValueError(f"unknown scheme {name!r}")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scheme", choices=["classical", "local", "global"], default="global")
    parser.add_argument("--layers", type=int, default=None,
                        help="layer count for the global scheme (default: one per qubit)")
    parser.add_argument("--max-stimuli", type=int, default=16)
    parser.add_argument("--epsilon", type=float, default=1e-8)
    parser.add_argument("--seed", type=int, default=0)


def _cmd_verify(args) -> int:
    spec = _load_circuit(args.spec)
    impl = _load_circuit(args.impl)
    scheme = _scheme_from_args(args.scheme, args.layers)
    config = VerificationConfig(scheme, args.max_stimuli, args.epsilon, args.seed)
    report = verify(spec, impl, config)
    detected = report.verdict is Verdict.ERROR_DETECTED
    print(f"verdict: {'error detected' if detected else 'no discrepancy found (budget exhausted)'}")
    print(f"scheme: {args.scheme}")
    print(f"stimuli used: {report.stimuli_used}")
    print(f"minimum fidelity: {report.min_fidelity:.6g}")
    print(f"elapsed: {report.elapsed:.4f} s")
    if detected and args.witness_out:
        Path(args.witness_out).write_text(emit_qasm(report.witness.prep))
        print(f"witness stimulus written to {args.witness_out}")
    return EXIT_DETECTED if detected else EXIT_OK


def _read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"malformed config line: {raw!r}")
        key, value = line.split("=", 1)
        values[key.strip()] = value.strip()
    return values


def _cmd_bench(args) -> int:
    file_values = _read_config_file(args.config) if args.config else {}

    def pick(flag_value, key, cast, default):
        if flag_value is not None:
            return flag_value
        if key in file_values:
            return cast(file_values[key])
        return default

    circuits = list(args.circuits or [])
    if not circuits and "circuit_paths" in file_values:
        circuits = file_values["circuit_paths"].split(",")
    if not circuits:
        print("error: no circuit files given", file=sys.stderr)
        return EXIT_ERROR

    scheme_names = pick(args.schemes, "schemes",
                        lambda s: s.split(","), ["classical", "local", "global"])
    option_labels = pick(args.options, "error_options",
                         lambda s: s.split(","), list(_OPTION_BY_LABEL))
    try:
        options = tuple(_OPTION_BY_LABEL[label] for label in option_labels)
    except KeyError as exc:
        print(f"error: unknown error option {exc}", file=sys.stderr)
        return EXIT_ERROR
    layers = pick(args.layers, "layers", int, None)
    config = BenchmarkConfig(
        circuit_paths=tuple(circuits),
        schemes=tuple(_scheme_from_args(name, layers) for name in scheme_names),
        error_options=options,
        error_seeds=pick(args.error_seeds, "error_seeds", int, 50),
        stimuli_seeds=pick(args.stimuli_seeds, "stimuli_seeds", int, 5),
        max_stimuli=pick(args.max_stimuli, "max_stimuli", int, 16),
        epsilon=pick(args.epsilon, "epsilon", float, 1e-8),
        output_path=pick(args.out, "output_path", str, None),
        master_seed=pick(args.seed, "master_seed", int, 0),
    )
    rows = run_benchmark(config)
    if args.format == "csv" and not config.output_path:
        write_csv(rows, "/dev/stdout")
    else:
        for row in rows:
            print(f"{row.circuit:>14} n={row.num_qubits:<3} {row.scheme:>9} "
                  f"{row.error_option:>14} p_s={row.p_s:7.2f}% "
                  f"avg_s={row.avg_stimuli:7.3f} avg_t={row.avg_time:.5f}s "
                  f"(total={row.total} skipped={row.skipped} equiv={row.equiv_filtered})")
    if config.output_path:
        print(f"CSV written to {config.output_path}")
    return EXIT_OK


def _cmd_mutate(args) -> int:
    circuit = _load_circuit(args.spec)
    option = _OPTION_BY_LABEL.get(args.option)
    if option is None:
        print(f"error: unknown error option {args.option!r}; "
              f"choose from {', '.join(_OPTION_BY_LABEL)}", file=sys.stderr)
        return EXIT_ERROR
    try:
        mutant = mutate(circuit, option, RandomSource(args.seed))
    except MutationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    text = emit_qasm(mutant)
    if args.out:
        Path(args.out).write_text(text)
        print(f"mutated circuit written to {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_gen_circuits(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    sizes = [int(s) for s in args.sizes.split(",")]
    families = args.families.split(",")
    written = []
    for n in sizes:
        for family in families:
            if family == "ghz":
                circuit = ghz(n)
            elif family == "qft":
                circuit = qft(n)
            elif family == "random":
                circuit = random_circuit(n, args.gates or 4 * n,
                                         RandomSource(args.seed, n), with_toffoli=True)
            else:
                print(f"error: unknown family {family!r}", file=sys.stderr)
                return EXIT_ERROR
            path = out_dir / f"{circuit.name}.qasm"
            path.write_text(emit_qasm(circuit))
            written.append(path)
    for path in written:
        print(path)
    return EXIT_OK


def _cmd_oracle_check(args) -> int:
    spec = _load_circuit(args.spec)
    impl = _load_circuit(args.impl)
    if spec.num_qubits != impl.num_qubits:
        print("error: qubit counts differ", file=sys.stderr)
        return EXIT_ERROR
    n = spec.num_qubits
    if n > ORACLE_LIMIT:
        print(f"error: oracle supports up to {ORACLE_LIMIT} qubits, got {n}", file=sys.stderr)
        return EXIT_ERROR
    u = build_unitary(spec)
    v = build_unitary(impl)
    f_ent = ent_fidelity(u, v)
    f_avg = avg_fidelity(u, v)
    print(f"entanglement fidelity: {f_ent:.12f}")
    print(f"average gate fidelity: {f_avg:.12f}")
    if n <= OMEGA_LIMIT:
        print(f"entanglement fidelity via |Omega>: {ent_fidelity_via_omega(spec, impl):.12f}")
    print(f"mean fidelity over all 6^{n} local stimuli: {mean_local_fidelity(spec, impl):.12f}")
    equivalent = f_avg > 1.0 - 1e-10
    print(f"functionally equivalent: {'yes' if equivalent else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stimcheck",
        description="Simulative equivalence checking for quantum circuits via random stimuli",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="check a realization against a specification")
    p_verify.add_argument("spec")
    p_verify.add_argument("impl")
    _add_common_flags(p_verify)
    p_verify.add_argument("--witness-out", default=None,
                          help="write the detecting stimulus prep circuit as QASM")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="run the error-injection benchmark")
    p_bench.add_argument("circuits", nargs="*", help="QASM circuit files")
    p_bench.add_argument("--config", default=None, help="key = value config file")
    p_bench.add_argument("--schemes", type=lambda s: s.split(","), default=None)
    p_bench.add_argument("--options", type=lambda s: s.split(","), default=None)
    p_bench.add_argument("--error-seeds", type=int, default=None)
    p_bench.add_argument("--stimuli-seeds", type=int, default=None)
    p_bench.add_argument("--max-stimuli", type=int, default=None)
    p_bench.add_argument("--epsilon", type=float, default=None)
    p_bench.add_argument("--layers", type=int, default=None)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--out", default=None, help="CSV output path")
    p_bench.add_argument("--format", choices=["csv", "text"], default="text")
    p_bench.set_defaults(func=_cmd_bench)

    p_mutate = sub.add_parser("mutate", help="inject an error into a circuit")
    p_mutate.add_argument("spec")
    p_mutate.add_argument("--option", required=True)
    p_mutate.add_argument("--seed", type=int, default=0)
    p_mutate.add_argument("--out", default=None)
    p_mutate.set_defaults(func=_cmd_mutate)

    p_gen = sub.add_parser("gen-circuits", help="write the bundled circuit families as QASM")
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--sizes", default="4,6,8")
    p_gen.add_argument("--families", default="ghz,qft,random")
    p_gen.add_argument("--gates", type=int, default=None,
                       help="gate count for random circuits (default 4n)")
    p_gen.add_argument("--seed", type=int, default=2024)
    p_gen.set_defaults(func=_cmd_gen_circuits)

    p_oracle = sub.add_parser("oracle-check", help="brute-force fidelity measures at small n")
    p_oracle.add_argument("spec")
    p_oracle.add_argument("impl")
    p_oracle.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QasmError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
