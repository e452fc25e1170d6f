"""Reader for the benchmark CSV contract.

The benchmark harness emits rows with the fixed header

    process,N,lmax,alpha,seed,status,n_states,cmu,hmu,vd_L10,vd_scaled,ms_elapsed

where status is "ok" for a single run, "failed" for a run that produced no
model, and "mean" for the per-cell aggregate row. This module validates the
schema and aggregates per-cell means; it is the only coupling between the
figure scripts and the reconstruction code.
"""

import csv
from collections import defaultdict

COLUMNS = (
    "process", "N", "lmax", "alpha", "seed", "status",
    "n_states", "cmu", "hmu", "vd_L10", "vd_scaled", "ms_elapsed",
)

METRICS = ("n_states", "cmu", "hmu", "vd_L10", "vd_scaled")


class SchemaMismatch(Exception):
    pass


def load_rows(path):
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames
            rows = list(reader)
    except OSError as exc:
        raise SchemaMismatch(f"cannot read {path}: {exc}") from exc
    if header is None:
        raise SchemaMismatch(f"{path} is empty")
    missing = [c for c in COLUMNS if c not in header]
    if missing:
        raise SchemaMismatch(f"{path} lacks columns: {', '.join(missing)}")
    if not rows:
        raise SchemaMismatch(f"{path} has a header but no rows")
    return rows


def cell_means(rows):
    """Mean metric per (N, lmax) cell: {metric: {N: {lmax: value}}}.

    Means are computed from the "ok" rows; cells present only as "mean" rows
    (already-aggregated files) fall back to those.
    """
    out = {metric: defaultdict(dict) for metric in METRICS}
    by_cell = defaultdict(list)
    mean_rows = {}
    for row in rows:
        try:
            n, lmax = int(row["N"]), int(row["lmax"])
        except (TypeError, ValueError) as exc:
            raise SchemaMismatch(f"bad N/lmax in row: {row}") from exc
        if row["status"] == "ok":
            by_cell[(n, lmax)].append(row)
        elif row["status"] == "mean":
            mean_rows[(n, lmax)] = row
    cells = set(by_cell) | set(mean_rows)
    for n, lmax in sorted(cells):
        source = by_cell.get((n, lmax))
        for metric in METRICS:
            if source:
                values = [float(r[metric]) for r in source if r[metric] != ""]
            else:
                raw = mean_rows[(n, lmax)][metric]
                values = [float(raw)] if raw != "" else []
            if values:
                out[metric][n][lmax] = sum(values) / len(values)
    return out


def series(metric_means, min_lmax=1):
    """Per-N curves of a metric: sorted [(N, [lmax...], [value...])]."""
    curves = []
    for n in sorted(metric_means):
        lmaxes = sorted(l for l in metric_means[n] if l >= min_lmax)
        if lmaxes:
            curves.append((n, lmaxes, [metric_means[n][l] for l in lmaxes]))
    return curves
