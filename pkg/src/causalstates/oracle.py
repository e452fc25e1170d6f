"""Reference reconstruction on exact conditional probabilities.

When the generating machine is known, every word probability and every morph
can be computed exactly by propagating the stationary state distribution
through the labeled transition matrices. Feeding those exact values through
the same splitting pipeline, with the statistical test replaced by an
equality comparison, yields the partition the sampled algorithm is trying to
estimate. That partition is the independent reference for derived expected
values and for sampled-vs-exact agreement tests.
"""

from __future__ import annotations

import numpy as np

from .counts import Word
from .errors import LmaxBelowSynchronization, NoRecurrentStates, WordTooLong
from .determinize import determinize
from .homogenize import StateSet, homogenize
from .machine import EpsilonMachine, stationary_vector
from .stat_tests import Morph


class ExactStore:
    """Count-store lookalike whose counts are exact word probabilities.

    table[w] is the stationary probability of observing w, for words up to
    length lmax+1; zero-probability words are omitted.
    """

    def __init__(self, machine: EpsilonMachine, lmax: int):
        self.k = machine.k
        self.lmax = lmax
        self.alphabet = machine.alphabet
        self.table: dict[Word, float] = {}
        pi = stationary_vector(machine)

        def walk(word: Word, vec: np.ndarray):
            prob = float(vec.sum())
            if prob <= 0.0:
                return
            if word:
                self.table[word] = prob
            if len(word) < lmax + 1:
                for a in range(self.k):
                    walk(word + (a,), vec @ machine.T[a])

        walk((), pi)

    def count(self, w: Word) -> float:
        if len(w) > self.lmax + 1:
            raise WordTooLong(f"word of length {len(w)} exceeds lmax+1")
        return self.table.get(tuple(w), 0.0)

    def next_counts(self, w: Word) -> np.ndarray:
        if len(w) > self.lmax:
            raise WordTooLong(f"suffix of length {len(w)} exceeds lmax")
        w = tuple(w)
        return np.array([self.table.get(w + (a,), 0.0) for a in range(self.k)])

    def words_of_length(self, length: int) -> list[Word]:
        return sorted(w for w in self.table if len(w) == length)


def exact_morphs(machine: EpsilonMachine, lmax: int) -> dict[Word, Morph]:
    """Exact next-symbol distribution of every positive-probability word.

    Computed directly: condition the stationary state distribution on having
    just emitted w, then read off one-step emission probabilities.
    """
    pi = stationary_vector(machine)
    emission = machine.emission_probs()
    out: dict[Word, Morph] = {}

    def walk(word: Word, vec: np.ndarray):
        prob = float(vec.sum())
        if prob <= 0.0:
            return
        state_dist = vec / prob
        out[word] = Morph(probs=state_dist @ emission, support=prob)
        if len(word) < lmax:
            for a in range(machine.k):
                walk(word + (a,), vec @ machine.T[a])

    walk((), pi)
    return out


def exact_reconstruct(machine: EpsilonMachine, lmax: int) -> StateSet:
    """Run the splitting pipeline on exact probabilities.

    Comparisons are exact equality (tolerance 1e-12), so the result is the
    recurrent causal-state partition over suffixes of length <= lmax,
    provided lmax reaches the process's synchronization length.
    """
    store = ExactStore(machine, lmax)
    stateset = homogenize(store, alpha=0.5, lmax=lmax, test="exact", min_support=0.0)
    try:
        return determinize(stateset, store)
    except NoRecurrentStates as exc:
        raise LmaxBelowSynchronization(
            f"no recurrent structure at lmax={lmax}; history too short to synchronize"
        ) from exc


def partition_agrees(sampled: StateSet, reference: StateSet) -> bool:
    """Do two suffix partitions agree on their common suffixes?

    True when every pair of suffixes retained by both sits together in one
    partition exactly when it sits together in the other.
    """
    common = set(sampled.assignment) & set(reference.assignment)
    grouping: dict[tuple, set] = {}
    for w in common:
        key = sampled.assignment[w]
        grouping.setdefault(key, set()).add(w)
    ref_grouping: dict[tuple, set] = {}
    for w in common:
        key = reference.assignment[w]
        ref_grouping.setdefault(key, set()).add(w)
    return set(map(frozenset, grouping.values())) == set(
        map(frozenset, ref_grouping.values())
    )
