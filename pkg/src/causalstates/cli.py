"""Command-line entry point.

Subcommands: reconstruct (data file -> machine + report), simulate (builtin
process -> sequence file), benchmark (grid of seeded runs -> CSV), oracle
(exact partition of a builtin process), baseline (subtree merging). All
outputs land in --output-dir; exit code 0 on success, 1 with a message on
stderr for any package error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .baseline import subtree_merge
from .benchmark import BenchmarkConfig, run_benchmark, write_csv
from .counts import build_counts
from .errors import CausalStatesError
from .ingest import alphabet_from_spec, load_multisequence, write_sequences
from .machine import export
from .oracle import exact_reconstruct
from .pipeline import reconstruct_from_counts
from .simulate import builtin_process, simulate


def _add_io_args(p):
    p.add_argument("--input", required=True, help="input sequence file")
    p.add_argument("--alphabet", required=True,
                   help="symbols: one char each, or comma-separated tokens")
    p.add_argument("--format", choices=("chars", "tokens"), default="chars")


def _add_out(p):
    p.add_argument("--output-dir", default=".", help="directory for output files")


def build_parser():
    parser = argparse.ArgumentParser(prog="causalstates")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reconstruct", help="reconstruct a machine from data")
    _add_io_args(p)
    _add_out(p)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--test", choices=("ks", "chisq"), default="ks")
    p.add_argument("--trace", help="write per-suffix split decisions to this file")

    p = sub.add_parser("simulate", help="sample a builtin process")
    _add_out(p)
    p.add_argument("--process", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("chars", "tokens"), default="chars")

    p = sub.add_parser("benchmark", help="run a seeded (N, lmax) grid")
    _add_out(p)
    p.add_argument("--process", required=True)
    p.add_argument("--grid-n", required=True, help="comma-separated sequence lengths")
    p.add_argument("--grid-lmax", required=True, help="comma-separated history lengths")
    p.add_argument("--reps", type=int, default=30)
    p.add_argument("--alpha", type=float, default=1e-3)
    p.add_argument("--test", choices=("ks", "chisq"), default="ks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("oracle", help="exact partition of a builtin process")
    _add_out(p)
    p.add_argument("--process", required=True)
    p.add_argument("--lmax", type=int, required=True)

    p = sub.add_parser("baseline", help="subtree-merging baseline")
    _add_io_args(p)
    _add_out(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    return parser


def cmd_reconstruct(args) -> int:
    alphabet = alphabet_from_spec(args.alphabet)
    alphabet.require_reconstructable()
    seqs = load_multisequence(args.input, alphabet, args.format)
    trace_lines = []
    trace = trace_lines.append if args.trace else None
    store = build_counts(seqs, args.lmax)
    result = reconstruct_from_counts(store, args.alpha, args.lmax,
                                     test=args.test, trace=trace)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "machine.json").write_text(export(result.machine, "json") + "\n")
    (out / "machine.dot").write_text(export(result.machine, "dot") + "\n")
    if args.trace:
        Path(args.trace).write_text("\n".join(trace_lines) + "\n")
    report = {
        "config": {
            "command": "reconstruct",
            "input": str(args.input),
            "alphabet": list(alphabet.symbols),
            "format": args.format,
            "lmax": args.lmax,
            "alpha": args.alpha,
            "test": args.test,
        },
        **result.summary(),
        "transitions": json.loads(export(result.machine, "json"))["transitions"],
        "diagnostics": result.diagnostics(),
    }
    (out / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    print(f"reconstructed {result.n_states} states "
          f"(report in {out / 'report.json'})")
    return 0


def cmd_simulate(args) -> int:
    spec = builtin_process(args.process)
    seq = simulate(spec, args.n, args.seed)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_sequences(out / "sequence.txt", [seq], args.format)
    print(f"wrote {seq.n} symbols to {out / 'sequence.txt'}")
    return 0


def cmd_benchmark(args) -> int:
    cfg = BenchmarkConfig(
        process=args.process,
        grid_n=tuple(int(x) for x in args.grid_n.split(",") if x),
        grid_lmax=tuple(int(x) for x in args.grid_lmax.split(",") if x),
        reps=args.reps,
        alpha=args.alpha,
        test=args.test,
        seed=args.seed,
    )
    rows = run_benchmark(cfg, workers=args.workers)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "benchmark.csv", "w") as fh:
        write_csv(rows, fh)
    n_failed = sum(1 for r in rows if r.status == "failed")
    print(f"wrote {len(rows)} rows to {out / 'benchmark.csv'} ({n_failed} failed runs)")
    return 0


def cmd_oracle(args) -> int:
    spec = builtin_process(args.process)
    stateset = exact_reconstruct(spec.machine, args.lmax)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    doc = {
        "process": args.process,
        "lmax": args.lmax,
        "n_states": stateset.n_states,
        "states": [
            {
                "id": s.id,
                "suffixes": ["".join(spec.machine.alphabet.symbols[i] for i in w)
                             for w in s.sorted_suffixes()],
            }
            for s in stateset.states
        ],
    }
    (out / "partition.json").write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"oracle partition has {stateset.n_states} states "
          f"({out / 'partition.json'})")
    return 0


def cmd_baseline(args) -> int:
    alphabet = alphabet_from_spec(args.alphabet)
    seqs = load_multisequence(args.input, alphabet, args.format)
    model = subtree_merge(seqs, args.depth, args.delta)
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "baseline.json").write_text(model.to_json() + "\n")
    (out / "baseline.dot").write_text(model.to_dot() + "\n")
    print(f"baseline found {model.n_classes} classes "
          f"(deterministic: {model.deterministic})")
    return 0


COMMANDS = {
    "reconstruct": cmd_reconstruct,
    "simulate": cmd_simulate,
    "benchmark": cmd_benchmark,
    "oracle": cmd_oracle,
    "baseline": cmd_baseline,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CausalStatesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
