#!/usr/bin/env python3
"""Prediction error versus history length, one curve per data size.

Unscaled mode: mean variational distance over length-10 words on a log
scale. Scaled mode (--scaled): the same error multiplied by sqrt(N) on a
linear scale, restricted to lmax >= 3 by default (lower the cutoff with
--min-lmax to show how the smallest data sizes miss the collapse).

Usage: python plot_error.py --csv benchmark.csv --out error [--scaled]
"""

import argparse
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from benchcsv import cell_means, load_rows, series


def render(csv_path, out_base, scaled=False, min_lmax=None):
    means = cell_means(load_rows(csv_path))
    if min_lmax is None:
        min_lmax = 3 if scaled else 1
    metric = "vd_scaled" if scaled else "vd_L10"
    curves = series(means[metric], min_lmax=min_lmax)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for n, lmaxes, values in curves:
        ax.plot(lmaxes, values, marker="o", label=f"N = {n:g}")
    ax.set_xlabel("maximum history length")
    if scaled:
        ax.set_ylabel("mean variational distance x sqrt(N), length-10 words")
    else:
        ax.set_yscale("log")
        ax.set_ylabel("mean variational distance, length-10 words")
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
    parser.add_argument("--scaled", action="store_true")
    parser.add_argument("--min-lmax", type=int, default=None)
    args = parser.parse_args(argv)
    for path in render(args.csv, args.out, args.scaled, args.min_lmax):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
