#!/usr/bin/env python3
"""Reproduce the learning-dynamics experiment grid on the even process.

Simulates the process at several data sizes, reconstructs at a range of
history lengths (30 seeded realizations per cell, significance level 1e-3),
and writes benchmark.csv in the harness schema. Render the figures with the
scripts in plots/ afterwards:

    python scripts/run_even_grid.py --out artifacts
    python plots/plot_states.py --csv artifacts/benchmark.csv --out artifacts/states
    python plots/plot_error.py  --csv artifacts/benchmark.csv --out artifacts/error
    python plots/plot_error.py  --csv artifacts/benchmark.csv --out artifacts/error_scaled --scaled
"""

import argparse
import time
from pathlib import Path

from causalstates import BenchmarkConfig, run_benchmark, write_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--process", default="even")
    parser.add_argument("--grid-n", default="100,1000,10000,100000,1000000")
    parser.add_argument("--grid-lmax", default="1,2,3,4,5,6")
    parser.add_argument("--reps", type=int, default=30)
    parser.add_argument("--alpha", type=float, default=1e-3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--out", default="artifacts")
    args = parser.parse_args()

    cfg = BenchmarkConfig(
        process=args.process,
        grid_n=tuple(int(x) for x in args.grid_n.split(",")),
        grid_lmax=tuple(int(x) for x in args.grid_lmax.split(",")),
        reps=args.reps,
        alpha=args.alpha,
        seed=args.seed,
    )
    start = time.perf_counter()
    rows = run_benchmark(cfg, workers=args.workers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "benchmark.csv", "w") as fh:
        write_csv(rows, fh)
    failed = sum(1 for r in rows if r.status == "failed")
    print(f"{len(rows)} rows ({failed} failed runs) in "
          f"{time.perf_counter() - start:.1f} s -> {out / 'benchmark.csv'}")


if __name__ == "__main__":
    main()
