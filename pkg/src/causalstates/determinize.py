"""Successor structure, transient pruning, and determinization
(Procedure III of the splitting reconstruction).

A suffix's successor on symbol a is read off the retained-suffix partition:
for a suffix shorter than lmax, appending a yields a word that is itself a
retained suffix whenever the continuation was observed, and its state is the
successor. For a suffix already at full length lmax, appending a symbol and
truncating back to lmax drops the suffix's oldest symbol, which can alias
histories from different states (e.g. a sofic process where the dropped
symbol was the only evidence of synchronization). Such lookups are treated as
"no evidence": they yield no successor, contribute no graph edges, and never
force splits. This is what lets the transient pruning step isolate the
recurrent core exactly as in the worked reconstruction example.

Transient removal keeps exactly the states lying in closed strongly connected
components of the state graph (no edges leaving the component, and at least
one outgoing edge per state so the dynamics can continue). Determinization
splits any state whose member suffixes disagree about their successor on some
symbol, restarting the scan after every split, and prunes transients again at
the end.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .counts import Word
from .errors import NoRecurrentStates
from .homogenize import StateSet


def successor(stateset: StateSet, store, w: Word, a: int):
    """State id reached from suffix w on emitting a, or None without evidence.

    None when the continuation wa was never observed, or when w is already at
    full length so the extension cannot be resolved against retained suffixes
    without dropping history.
    """
    w = tuple(w)
    wa = w + (a,)
    if store.count(wa) <= 0:
        return None
    if len(w) >= stateset.lmax:
        return None
    return stateset.assignment.get(wa)


def _state_edges(stateset, store):
    """Per-state successor sets: {state id: {symbol: set of target ids}}."""
    edges = {}
    for s in stateset.states:
        by_symbol = {}
        for w in s.suffixes:
            for a in range(stateset.k):
                t = successor(stateset, store, w, a)
                if t is not None:
                    by_symbol.setdefault(a, set()).add(t)
        edges[s.id] = by_symbol
    return edges


def remove_transients(stateset: StateSet, store) -> StateSet:
    """Keep only states in closed SCCs of the state graph (recurrent core).

    Returns a new StateSet; the input is not modified.
    """
    stateset = stateset.clone()
    return _remove_transients_inplace(stateset, store)


def _remove_transients_inplace(stateset: StateSet, store) -> StateSet:
    ids = [s.id for s in stateset.states]
    index = {sid: i for i, sid in enumerate(ids)}
    n = len(ids)
    edges = _state_edges(stateset, store)
    rows, cols = [], []
    for sid, by_symbol in edges.items():
        for targets in by_symbol.values():
            for t in targets:
                rows.append(index[sid])
                cols.append(index[t])
    adj = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    n_comp, labels = connected_components(adj, directed=True, connection="strong")

    outgoing = [set() for _ in range(n)]
    for r, c in zip(rows, cols):
        outgoing[r].add(c)
    comp_closed = [True] * n_comp
    comp_has_edge = [False] * n_comp
    for i in range(n):
        for j in outgoing[i]:
            if labels[j] != labels[i]:
                comp_closed[labels[i]] = False
            else:
                comp_has_edge[labels[i]] = True

    keep = {
        ids[i]
        for i in range(n)
        if comp_closed[labels[i]] and comp_has_edge[labels[i]]
    }
    if not keep:
        raise NoRecurrentStates("every state is transient")
    stateset.remove_states(set(ids) - keep)
    return stateset


def determinize(stateset: StateSet, store) -> StateSet:
    """Prune transients, split until transitions are deterministic, re-prune.

    Splitting partitions a state's suffixes by their successor on the
    offending symbol; suffixes with no successor evidence join the group with
    the largest support (ties to the earliest group). The group holding the
    lexicographically least suffix keeps the state id; the remaining groups
    become new states in first-encounter order, created with the parent's
    pooled morph and re-pooled from their members immediately. After any
    split the scan restarts from the first state.

    Returns a new StateSet; the input is not modified.
    """
    stateset = remove_transients(stateset, store)
    while _split_once(stateset, store):
        pass
    return _remove_transients_inplace(stateset, store)


def _split_once(stateset, store) -> bool:
    for state in list(stateset.states):
        for a in range(stateset.k):
            members = state.sorted_suffixes()
            groups: dict[int, list[Word]] = {}
            group_order: list[int] = []
            undecided: list[Word] = []
            for w in members:
                t = successor(stateset, store, w, a)
                if t is None:
                    undecided.append(w)
                else:
                    if t not in groups:
                        groups[t] = []
                        group_order.append(t)
                    groups[t].append(w)
            if len(groups) <= 1:
                continue

            if undecided:
                supports = {
                    t: sum(store.next_counts(w).sum() for w in groups[t])
                    for t in group_order
                }
                host = max(group_order, key=lambda t: (supports[t], -group_order.index(t)))
                groups[host].extend(undecided)

            least = min(members)
            stay_key = next(t for t in group_order if least in groups[t])
            for t in group_order:
                if t == stay_key:
                    continue
                pooled = state.pooled.copy()  # parent morph until re-pooled
                new = stateset.new_state(set(), pooled)
                for w in groups[t]:
                    stateset.assign(w, new.id)
            state.suffixes = set(groups[stay_key])
            stateset.recompute_pools(store)
            return True
    return False
