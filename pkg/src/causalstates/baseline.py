"""Subtree-merging reconstruction, kept as a comparison baseline.

Builds the k-ary tree of sliding length-D windows, attaches empirical
length-L future distributions (L = D/2) to each node, and merges nodes whose
future distributions agree within a flat tolerance delta on every length-L
word. The tolerance is a raw per-probability threshold, deliberately not a
statistical test and not adjusted for how often each node was visited; the
resulting transition structure may come out nondeterministic, and when it
does the model is flagged rather than repaired. Both weaknesses are the
point of the comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .counts import Word, build_counts
from .errors import BadParameter, DepthTooLargeForData, LmaxTooLargeForData

POLICY = (
    "nodes in breadth-first (length, lexicographic) order; class pairs scanned "
    "in least-member-index order; qualifying pair merged into the lower index; "
    "class futures re-pooled after each merge; repeat to fixpoint"
)


def merge_order_policy() -> str:
    return POLICY


@dataclass
class BaselineModel:
    k: int
    depth: int
    delta: float
    classes: list[tuple[Word, ...]]
    morphs: list[np.ndarray] = field(repr=False)
    transitions: dict = field(repr=False)  # (class, symbol) -> {target: prob}
    deterministic: bool = True
    policy: str = POLICY

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def to_json(self) -> str:
        doc = {
            "alphabet": [str(a) for a in range(self.k)],
            "depth": self.depth,
            "delta": self.delta,
            "deterministic": self.deterministic,
            "policy": self.policy,
            "states": [
                {"id": i, "suffixes": [[str(s) for s in w] for w in members]}
                for i, members in enumerate(self.classes)
            ],
            "transitions": [
                {"from": ci, "symbol": str(a), "to": tj, "prob": prob}
                for (ci, a), targets in sorted(self.transitions.items())
                for tj, prob in sorted(targets.items())
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    def to_dot(self) -> str:
        lines = ["digraph baseline {", "  rankdir=LR;"]
        lines.append(f'  label="deterministic: {str(self.deterministic).lower()}";')
        for i in range(self.n_classes):
            lines.append(f'  s{i} [label="{i}", shape=circle];')
        for (ci, a), targets in sorted(self.transitions.items()):
            for tj, prob in sorted(targets.items()):
                lines.append(f'  s{ci} -> s{tj} [label="{a} | {prob:.3f}"];')
        lines.append("}")
        return "\n".join(lines)


def subtree_merge(seqs, depth: int, delta: float) -> BaselineModel:
    """Merge tree nodes whose length-(depth/2) futures agree within delta."""
    if depth < 2 or depth % 2 != 0:
        raise BadParameter("depth must be an even integer >= 2")
    if not 0.0 < delta < 1.0:
        raise BadParameter("delta must be in (0, 1)")
    try:
        store = build_counts(seqs, depth - 1)
    except LmaxTooLargeForData as exc:
        raise DepthTooLargeForData(str(exc)) from exc
    return subtree_merge_from_store(store, depth, delta)


def subtree_merge_from_store(store, depth: int, delta: float) -> BaselineModel:
    """Core merging on any count source covering words up to length depth."""
    if store.lmax + 1 < depth:
        raise DepthTooLargeForData("count source too shallow for requested depth")
    k = store.k
    horizon = depth // 2
    futures_words = list(product(range(k), repeat=horizon))

    # nodes whose subtrees have depth exactly D/2, i.e. the depth-D/2 nodes,
    # in breadth-first order
    nodes: list[Word] = []
    raw_futures: list[np.ndarray] = []
    for w in store.words_of_length(horizon):
        counts = np.array([store.count(w + u) for u in futures_words], dtype=float)
        if counts.sum() > 0:
            nodes.append(w)
            raw_futures.append(counts)
    if not nodes:
        raise DepthTooLargeForData(f"no depth-{horizon} node has a depth-{horizon} subtree")

    parent = list(range(len(nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def class_future(root):
        total = np.zeros(len(futures_words))
        for i in range(len(nodes)):
            if find(i) == root:
                total += raw_futures[i]
        return total / total.sum()

    while True:
        roots = sorted({find(i) for i in range(len(nodes))})
        futures = {r: class_future(r) for r in roots}
        merged = False
        for pos, ri in enumerate(roots):
            for rj in roots[pos + 1 :]:
                if np.max(np.abs(futures[ri] - futures[rj])) <= delta:
                    parent[rj] = ri
                    merged = True
                    break
            if merged:
                break
        if not merged:
            break

    roots = sorted({find(i) for i in range(len(nodes))})
    class_of_root = {r: ci for ci, r in enumerate(roots)}
    class_of_node = {nodes[i]: class_of_root[find(i)] for i in range(len(nodes))}
    classes = [
        tuple(sorted(nodes[i] for i in range(len(nodes)) if find(i) == r))
        for r in roots
    ]

    morphs = []
    for members in classes:
        pooled = np.zeros(k)
        for w in members:
            pooled += store.next_counts(w)
        morphs.append(pooled / pooled.sum() if pooled.sum() > 0 else pooled)

    transitions: dict = {}
    deterministic = True
    for ci, members in enumerate(classes):
        for a in range(k):
            mass: dict[int, float] = {}
            total = sum(store.next_counts(w).sum() for w in members)
            for w in members:
                emitted = store.count(w + (a,))
                if emitted <= 0:
                    continue
                v = (w + (a,))[-min(len(w) + 1, horizon):]
                target = class_of_node.get(v)
                if target is None:
                    continue
                mass[target] = mass.get(target, 0.0) + emitted
            if mass:
                transitions[(ci, a)] = {t: c / total for t, c in mass.items()}
                if len(mass) > 1:
                    deterministic = False

    return BaselineModel(
        k=k,
        depth=depth,
        delta=delta,
        classes=classes,
        morphs=morphs,
        transitions=transitions,
        deterministic=deterministic,
    )
