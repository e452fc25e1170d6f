"""Seeded benchmark grids over (N, lmax) cells for the bundled processes.

Each cell is simulated and reconstructed ``reps`` times. The realization used
for a given (N, rep) pair is shared across lmax values (one simulation,
several reconstructions), matching how convergence-versus-history-length
curves are normally produced. Results are rows with a fixed CSV schema:

    process,N,lmax,alpha,seed,status,n_states,cmu,hmu,vd_L10,vd_scaled,ms_elapsed

One aggregate row (status "mean", empty seed) follows each cell's runs,
averaging the metric columns over the runs that succeeded. All randomness is
derived from SeedSequence((seed, N, rep)), so results are reproducible and
independent of worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .counts import build_counts
from .errors import CausalStatesError
from .machine import (
    entropy_rate,
    statistical_complexity,
    variational_distance,
    word_distribution,
)
from .pipeline import reconstruct_from_counts
from .simulate import builtin_process, simulate

CSV_COLUMNS = (
    "process", "N", "lmax", "alpha", "seed", "status",
    "n_states", "cmu", "hmu", "vd_L10", "vd_scaled", "ms_elapsed",
)


@dataclass(frozen=True)
class BenchmarkConfig:
    process: str
    grid_n: tuple
    grid_lmax: tuple
    reps: int = 30
    alpha: float = 1e-3
    test: str = "ks"
    seed: int = 0
    word_length: int = 10

    def __post_init__(self):
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must be in (0, 1)")
        if not self.grid_n or not self.grid_lmax:
            raise ValueError("grid is empty")
        if any(l < 1 for l in self.grid_lmax):
            raise ValueError("lmax values must be >= 1")


@dataclass
class BenchmarkRow:
    process: str
    n: int
    lmax: int
    alpha: float
    seed: object          # rep index for runs, "" for mean rows
    status: str           # ok | failed | mean
    n_states: float | None = None
    cmu: float | None = None
    hmu: float | None = None
    vd_l10: float | None = None
    vd_scaled: float | None = None
    ms_elapsed: float | None = None
    extras: dict = field(default_factory=dict)

    def csv_values(self):
        def num(x):
            if x is None:
                return ""
            if isinstance(x, (int, np.integer)):
                return str(int(x))
            return f"{x:.10g}"

        return [
            self.process, str(self.n), str(self.lmax), f"{self.alpha:g}",
            str(self.seed), self.status,
            num(self.n_states), num(self.cmu), num(self.hmu),
            num(self.vd_l10), num(self.vd_scaled), num(self.ms_elapsed),
        ]


def _run_realization(cfg: BenchmarkConfig, n: int, rep: int) -> dict:
    """All lmax rows for one simulated realization of length n."""
    spec = builtin_process(cfg.process)
    true_dist = word_distribution(spec.machine, cfg.word_length)
    seed = np.random.SeedSequence((cfg.seed, n, rep))
    seq = simulate(spec, n, seed)
    rows = {}
    for lmax in cfg.grid_lmax:
        start = time.perf_counter()
        row = BenchmarkRow(process=cfg.process, n=n, lmax=lmax,
                           alpha=cfg.alpha, seed=rep, status="ok")
        try:
            store = build_counts([seq], lmax)
            result = reconstruct_from_counts(store, cfg.alpha, lmax, test=cfg.test)
            machine = result.machine
            row.n_states = machine.n_states
            row.cmu = statistical_complexity(machine)
            row.hmu = entropy_rate(machine)
            inferred = word_distribution(machine, cfg.word_length)
            row.vd_l10 = variational_distance(true_dist, inferred)
            row.vd_scaled = row.vd_l10 * math.sqrt(n)
        except CausalStatesError as exc:
            row.status = "failed"
            row.extras["error"] = type(exc).__name__
        row.ms_elapsed = (time.perf_counter() - start) * 1000.0
        rows[lmax] = row
    return rows


def run_benchmark(cfg: BenchmarkConfig, workers: int = 1) -> list[BenchmarkRow]:
    """Run the grid and return data rows plus one mean row per cell."""
    tasks = [(n, rep) for n in cfg.grid_n for rep in range(cfg.reps)]
    per_realization: dict = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for (n, rep), rows in zip(
                tasks, pool.map(_run_realization, [cfg] * len(tasks),
                                [t[0] for t in tasks], [t[1] for t in tasks])
            ):
                per_realization[(n, rep)] = rows
    else:
        for n, rep in tasks:
            per_realization[(n, rep)] = _run_realization(cfg, n, rep)

    out: list[BenchmarkRow] = []
    for n in cfg.grid_n:
        for lmax in cfg.grid_lmax:
            cell = [per_realization[(n, rep)][lmax] for rep in range(cfg.reps)]
            out.extend(cell)
            out.append(_mean_row(cfg, n, lmax, cell))
    return out


def _mean_row(cfg, n, lmax, cell) -> BenchmarkRow:
    ok = [r for r in cell if r.status == "ok"]
    row = BenchmarkRow(process=cfg.process, n=n, lmax=lmax, alpha=cfg.alpha,
                       seed="", status="mean")
    if ok:
        row.n_states = float(np.mean([r.n_states for r in ok]))
        row.cmu = float(np.mean([r.cmu for r in ok]))
        row.hmu = float(np.mean([r.hmu for r in ok]))
        row.vd_l10 = float(np.mean([r.vd_l10 for r in ok]))
        row.vd_scaled = float(np.mean([r.vd_scaled for r in ok]))
    row.ms_elapsed = float(np.mean([r.ms_elapsed for r in cell]))
    return row


def write_csv(rows, fh):
    fh.write(",".join(CSV_COLUMNS) + "\n")
    for row in rows:
        fh.write(",".join(row.csv_values()) + "\n")
