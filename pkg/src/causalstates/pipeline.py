"""End-to-end reconstruction: counts -> homogenize -> determinize -> machine."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .counts import CountStore, build_counts
from .determinize import determinize
from .diagnostics import ErrorBoundInputs, collective_error_bound, lmax_advisor
from .errors import Reducible
from .homogenize import StateSet, homogenize
from .machine import (
    EpsilonMachine,
    entropy_rate,
    estimate_transitions,
    statistical_complexity,
)


@dataclass
class ReconstructionResult:
    machine: EpsilonMachine
    stateset: StateSet
    store: CountStore = field(repr=False)
    elapsed_ms: float = 0.0

    @property
    def n_states(self) -> int:
        return self.machine.n_states

    def summary(self) -> dict:
        try:
            cmu = statistical_complexity(self.machine)
            hmu = entropy_rate(self.machine)
        except Reducible:
            cmu = hmu = None
        return {
            "n_states": self.n_states,
            "cmu_bits": cmu,
            "hmu_bits": hmu,
            "elapsed_ms": self.elapsed_ms,
        }

    def diagnostics(self, t: float = 0.1, epsilon: float = 0.1) -> dict:
        suffix_counts = [
            float(self.store.next_counts(w).sum())
            for state in self.stateset.states
            for w in state.suffixes
        ]
        n_total = self.store.totals.get(self.store.lmax + 1, 0) + self.store.lmax
        advised = lmax_advisor(max(n_total, 2), math.log2(self.store.k), epsilon)
        out = {
            "lmax": self.store.lmax,
            "lmax_advised": advised,
            "lmax_exceeds_advice": self.store.lmax > advised,
            "bound_t": t,
        }
        if suffix_counts:
            inputs = ErrorBoundInputs(
                k=self.store.k,
                s=len(suffix_counts),
                m=max(min(suffix_counts), 1.0),
                t=t,
                n_vec=tuple(max(c, 1.0) for c in suffix_counts),
            )
            bounds = collective_error_bound(inputs)
            out.update(
                {
                    "suffixes": len(suffix_counts),
                    "min_suffix_count": min(suffix_counts),
                    "morph_error_bound": bounds.min_based,
                    "morph_error_bound_per_suffix": bounds.per_suffix,
                }
            )
        return out


def reconstruct_from_counts(store: CountStore, alpha: float, lmax: int,
                            test="ks", min_support: float = 1.0,
                            trace=None) -> ReconstructionResult:
    start = time.perf_counter()
    stateset = homogenize(store, alpha, lmax, test=test,
                          min_support=min_support, trace=trace)
    stateset = determinize(stateset, store)
    machine = estimate_transitions(stateset, store)
    elapsed = (time.perf_counter() - start) * 1000.0
    return ReconstructionResult(machine=machine, stateset=stateset,
                                store=store, elapsed_ms=elapsed)


def reconstruct(seqs, lmax: int, alpha: float = 0.01, test="ks",
                min_support: float = 1.0, trace=None) -> ReconstructionResult:
    start = time.perf_counter()
    store = build_counts(seqs, lmax)
    result = reconstruct_from_counts(store, alpha, lmax, test=test,
                                     min_support=min_support, trace=trace)
    result.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return result
