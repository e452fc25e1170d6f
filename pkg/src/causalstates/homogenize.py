"""Growing a partition of history suffixes that is homogeneous for the next
symbol (Procedure II of the splitting reconstruction).

Starting from a single state holding the null suffix, each level L takes
every length-L suffix already placed in a state, generates its observed
children (one symbol deeper into the past), and asks whether the child's
next-symbol distribution is consistent with its parent state. A child that
disagrees with its parent is first offered to the other existing states
(restricted alternative: right distributions, wrong assignment) and only
founds a new state when nothing matches.

Conventions the paper leaves open, fixed here for reproducibility:

- iteration order: states by creation order, member suffixes lexicographic,
  children by prepended-symbol order;
- state pools are frozen for the duration of one L-pass and recomputed at the
  end of the pass (states founded mid-pass test against their founding
  counts);
- a child is tested against its parent state's pool with the child's own
  counts subtracted (they are nested inside the parent suffix's counts, so
  keeping them would bias the test toward agreement);
- children whose predictive support is zero are never created as suffixes;
- the closest matching state is the one with the largest p-value, ties broken
  by smaller statistic, then by creation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .counts import Word
from .errors import LmaxMismatch
from .stat_tests import Morph, get_test


@dataclass
class State:
    """A set of suffixes with their pooled next-symbol counts."""

    id: int
    suffixes: set[Word]
    pooled: np.ndarray  # per-symbol counts summed over member suffixes

    @property
    def support(self) -> float:
        return float(self.pooled.sum())

    @property
    def morph(self) -> Morph:
        return Morph.from_counts(self.pooled)

    def sorted_suffixes(self) -> list[Word]:
        return sorted(self.suffixes)


@dataclass
class StateSet:
    """A partition of retained suffixes into states."""

    k: int
    lmax: int
    states: list[State]
    assignment: dict[Word, int] = field(repr=False)
    next_id: int = 0

    def state_by_id(self, sid: int) -> State:
        for s in self.states:
            if s.id == sid:
                return s
        raise KeyError(sid)

    def new_state(self, suffixes: set[Word], pooled: np.ndarray) -> State:
        state = State(id=self.next_id, suffixes=set(suffixes), pooled=pooled.copy())
        self.next_id += 1
        self.states.append(state)
        for w in suffixes:
            self.assignment[w] = state.id
        return state

    def assign(self, w: Word, sid: int):
        old = self.assignment.get(w)
        if old is not None:
            self.state_by_id(old).suffixes.discard(w)
        self.state_by_id(sid).suffixes.add(w)
        self.assignment[w] = sid

    def remove_states(self, sids):
        sids = set(sids)
        for s in self.states:
            if s.id in sids:
                for w in s.suffixes:
                    del self.assignment[w]
        self.states = [s for s in self.states if s.id not in sids]

    def clone(self) -> "StateSet":
        return StateSet(
            k=self.k,
            lmax=self.lmax,
            states=[State(s.id, set(s.suffixes), s.pooled.copy()) for s in self.states],
            assignment=dict(self.assignment),
            next_id=self.next_id,
        )

    def recompute_pools(self, store):
        for s in self.states:
            pooled = np.zeros(self.k)
            for w in s.suffixes:
                pooled += store.next_counts(w)
            s.pooled = pooled

    def partition(self) -> list[frozenset]:
        """Suffix membership per live state, in creation order."""
        return [frozenset(s.suffixes) for s in self.states]

    @property
    def n_states(self) -> int:
        return len(self.states)


def initialize(store) -> StateSet:
    """One state holding the null suffix; its morph is the unconditional
    next-symbol distribution, i.e. the model of an IID process."""
    stateset = StateSet(k=store.k, lmax=store.lmax, states=[], assignment={})
    stateset.new_state({()}, store.next_counts(()))
    return stateset


def child_suffixes(w: Word, store) -> list[Word]:
    """Observed one-symbol-deeper extensions of a suffix, in symbol order."""
    out = []
    for a in range(store.k):
        child = (a,) + tuple(w)
        if store.next_counts(child).sum() > 0:
            out.append(child)
    return out


def homogenize(store, alpha: float, lmax: int, test="ks",
               min_support: float = 1.0, trace=None) -> StateSet:
    """Run the splitting passes for L = 0 .. lmax-1 and return the partition.

    ``test`` selects the significance test ("ks", "chisq", or a callable);
    ``min_support`` gates children: those with positive support below it join
    their parent untested (the default of 1 gates nothing on count data).
    """
    if store.lmax != lmax:
        raise LmaxMismatch(f"store built with lmax={store.lmax}, requested {lmax}")
    compare = get_test(test)
    stateset = initialize(store)

    for level in range(lmax):
        frozen = {s.id: s.pooled.copy() for s in stateset.states}
        order = [s.id for s in stateset.states]
        for sid in order:
            state = stateset.state_by_id(sid)
            members = sorted(w for w in state.suffixes if len(w) == level)
            for w in members:
                for a in range(store.k):
                    child = (a,) + w
                    child_counts = store.next_counts(child)
                    support = child_counts.sum()
                    if support <= 0:
                        continue
                    _place_child(stateset, frozen, compare, alpha, min_support,
                                 sid, child, child_counts, trace)
        stateset.recompute_pools(store)
    return stateset


def _place_child(stateset, frozen, compare, alpha, min_support,
                 parent_sid, child, child_counts, trace):
    child_morph = Morph.from_counts(child_counts)
    if 0 < child_morph.support < min_support:
        stateset.assign(child, parent_sid)
        _trace(trace, child, parent_sid, None, "stay")
        return

    remainder = np.maximum(frozen[parent_sid] - child_counts, 0.0)
    if remainder.sum() <= 0:
        # the child accounts for the whole parent pool: no independent
        # evidence to test against
        stateset.assign(child, parent_sid)
        _trace(trace, child, parent_sid, None, "stay")
        return
    result = compare(child_morph, Morph.from_counts(remainder), alpha)
    if not result.reject:
        stateset.assign(child, parent_sid)
        _trace(trace, child, parent_sid, result.p_value, "stay")
        return

    best = None
    for index, other in enumerate(stateset.states):
        if other.id == parent_sid:
            continue
        pool = frozen.get(other.id)
        if pool is None or pool.sum() <= 0:
            continue
        r = compare(child_morph, Morph.from_counts(pool), alpha)
        if r.reject:
            continue
        key = (-r.p_value, r.statistic, index)
        if best is None or key < best[0]:
            best = (key, other.id, r.p_value)
    if best is not None:
        _, target, p = best
        stateset.assign(child, target)
        _trace(trace, child, parent_sid, p, f"move({target})")
        return

    state = stateset.new_state({child}, child_counts)
    frozen[state.id] = child_counts.copy()
    _trace(trace, child, parent_sid, result.p_value, f"new({state.id})")


def _trace(trace, child, parent_sid, p_value, action):
    if trace is not None:
        p = "-" if p_value is None else f"{p_value:.6g}"
        trace(f"suffix={''.join(map(str, child))} parent={parent_sid} p={p} action={action}")
