#!/usr/bin/env python3
"""Inferred state count versus history length, one curve per data size.

Reads a benchmark CSV and writes <out>.png and <out>.svg with the mean
number of inferred states as a function of lmax, one line per N, plus a
horizontal reference line at the true state count.

Usage: python plot_states.py --csv benchmark.csv --out states [--true-states 2]
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from benchcsv import cell_means, load_rows, series


def render(csv_path, out_base, true_states=2):
    means = cell_means(load_rows(csv_path))
    curves = series(means["n_states"])
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for n, lmaxes, values in curves:
        ax.plot(lmaxes, values, marker="o", label=f"N = {n:g}")
    ax.axhline(true_states, color="gray", linestyle="--", linewidth=1,
               label=f"true ({true_states})")
    ax.set_xlabel("maximum history length")
    ax.set_ylabel("mean number of inferred states")
    ax.legend(fontsize=8)
    fig.tight_layout()
    written = []
    for suffix in (".png", ".svg"):
        target = Path(str(out_base)).with_suffix(suffix)
        fig.savefig(target)
        written.append(target)
    plt.close(fig)
    return written


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", required=True)
    parser.add_argument("--out", required=True, help="output path, extension ignored")
    parser.add_argument("--true-states", type=int, default=2)
    args = parser.parse_args(argv)
    for path in render(args.csv, args.out, args.true_states):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
