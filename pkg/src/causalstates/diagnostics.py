"""Quantitative run diagnostics: concentration bounds on morph error and the
maximum-history-length advisor.

The bounds are reported in run metadata only; they never gate the algorithm.
All logarithms are base 2, matching the bit-valued information quantities
elsewhere in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ErrorBoundInputs:
    k: int                      # alphabet size
    s: int                      # number of suffixes
    m: float                    # least per-suffix count
    t: float                    # variational tolerance
    n_vec: tuple | None = None  # per-suffix counts, for the tighter sum bound
    p_star: float | None = None  # probability of the least probable word

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError("t must be positive")
        if self.m < 1 or self.s < 1:
            raise ValueError("m and s must be >= 1")
        if self.p_star is not None and not 0 < self.p_star <= 1:
            raise ValueError("p_star must lie in (0, 1]")


@dataclass(frozen=True)
class ErrorBounds:
    min_based: float           # 2^(k+1) * s * exp(-8 m t^2), clamped at 1
    per_suffix: float | None   # sum_i 2^(k+1) exp(-8 n_i t^2), clamped at 1


def morph_error_bound(k: int, n: float, t: float) -> float:
    """P(estimated morph off by >= t in variational distance), one suffix.

    min(1, 2^(k+1) exp(-8 n t^2)).
    """
    if n < 1 or t <= 0:
        raise ValueError("need n >= 1 and t > 0")
    return min(1.0, 2.0 ** (k + 1) * math.exp(-8.0 * n * t * t))


def collective_error_bound(inputs: ErrorBoundInputs) -> ErrorBounds:
    """P(one or more of s suffixes off by >= t), via the least count m."""
    base = 2.0 ** (inputs.k + 1)
    min_based = min(1.0, base * inputs.s * math.exp(-8.0 * inputs.m * inputs.t**2))
    per_suffix = None
    if inputs.n_vec is not None:
        per_suffix = min(
            1.0, sum(base * math.exp(-8.0 * n * inputs.t**2) for n in inputs.n_vec)
        )
    return ErrorBounds(min_based=min_based, per_suffix=per_suffix)


def lmax_advisor(n: int, h_bound: float, epsilon: float = 0.1) -> int:
    """Largest history length with convergent word-probability estimates.

    floor(log2(N) / (h + epsilon)) with h an upper bound on the entropy rate
    (log2 of the alphabet size always works).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if h_bound <= 0 or epsilon <= 0:
        raise ValueError("h_bound and epsilon must be positive")
    return int(math.floor(math.log2(n) / (h_bound + epsilon)))
