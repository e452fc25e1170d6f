"""The reconstructed machine object and its analysis.

An EpsilonMachine is a set of states with labeled transition probabilities
T[s][i][j] = P(emit symbol s and move to state j | state i). Machines built
here are future resolving (at most one positive j per state and symbol) and
their state graphs are unions of closed strongly connected components.
Analysis operations: stationary distribution, stored-information and
entropy-rate summaries, distributions over emitted words, variational
distance, and the base-2 information quantities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import MismatchedSupport, NondeterministicInput, Reducible
from .ingest import Alphabet
from .counts import Word

ATOL = 1e-9


@dataclass(frozen=True)
class Distribution:
    """Outcomes paired with probabilities; sums to one."""

    outcomes: tuple

    def __post_init__(self):
        probs = np.array([p for _, p in self.outcomes], dtype=float)
        if probs.size and probs.min() < -ATOL:
            raise ValueError("negative probability")
        if abs(probs.sum() - 1.0) > ATOL:
            raise ValueError(f"probabilities sum to {probs.sum()}, not 1")

    def as_dict(self) -> dict:
        return dict(self.outcomes)

    def probs(self) -> np.ndarray:
        return np.array([p for _, p in self.outcomes], dtype=float)


@dataclass
class EpsilonMachine:
    alphabet: Alphabet
    T: np.ndarray  # shape (k, n_states, n_states)
    state_suffixes: list[tuple[Word, ...]] = field(default_factory=list)
    start_state: int | None = None

    def __post_init__(self):
        self.T = np.asarray(self.T, dtype=float)
        if not self.state_suffixes:
            self.state_suffixes = [() for _ in range(self.n_states)]

    @property
    def k(self) -> int:
        return self.alphabet.k

    @property
    def n_states(self) -> int:
        return self.T.shape[1]

    def state_matrix(self) -> np.ndarray:
        """P[i][j] = sum_s T[s][i][j], the induced state chain."""
        return self.T.sum(axis=0)

    def emission_probs(self) -> np.ndarray:
        """E[i][a] = P(next symbol a | state i)."""
        return self.T.sum(axis=2).T

    def row_sums(self) -> np.ndarray:
        return self.T.sum(axis=(0, 2))

    def is_stochastic(self, atol: float = ATOL) -> bool:
        return bool(
            self.T.min() >= -atol
            and np.all(np.abs(self.row_sums() - 1.0) <= atol)
        )

    def is_deterministic(self) -> bool:
        """At most one positive successor per (state, symbol)."""
        return bool(np.all((self.T > 0).sum(axis=2) <= 1))

    def is_recurrent(self) -> bool:
        """The positive-transition graph is a union of closed SCCs."""
        p = self.state_matrix() > 0
        n = self.n_states
        n_comp, labels = connected_components(
            coo_matrix(p), directed=True, connection="strong"
        )
        for i in range(n):
            for j in np.nonzero(p[i])[0]:
                if labels[j] != labels[i]:
                    return False
        return True

    def validate(self, atol: float = ATOL):
        if not self.is_stochastic(atol):
            raise ValueError("transition rows do not sum to 1")
        if not self.is_deterministic():
            raise NondeterministicInput("machine is not future resolving")

    def successor_table(self) -> np.ndarray:
        """nxt[i][a] = successor state, or -1 when symbol a is never emitted."""
        nxt = -np.ones((self.n_states, self.k), dtype=int)
        for a in range(self.k):
            for i in range(self.n_states):
                positive = np.nonzero(self.T[a][i] > 0)[0]
                if positive.size:
                    nxt[i, a] = positive[0]
        return nxt


def estimate_transitions(stateset, store) -> EpsilonMachine:
    """Labeled transition probabilities of a determinized state set.

    T[s][i][j] = pooled nu(ws) over member suffixes of state i, normalized by
    the pooled continuation count, with j the common successor on s.
    """
    from .determinize import successor as _successor

    states = list(stateset.states)
    index = {s.id: pos for pos, s in enumerate(states)}
    n = len(states)
    k = stateset.k
    T = np.zeros((k, n, n))
    for pos, s in enumerate(states):
        pooled = np.zeros(k)
        for w in s.suffixes:
            pooled += store.next_counts(w)
        targets = {}
        for a in range(k):
            seen = {
                _successor(stateset, store, w, a)
                for w in s.suffixes
            } - {None}
            if len(seen) > 1:
                raise NondeterministicInput(
                    f"state {s.id} has {len(seen)} successors on symbol {a}"
                )
            if seen:
                targets[a] = seen.pop()
        mass = sum(pooled[a] for a in targets if pooled[a] > 0)
        if mass <= 0:
            raise NondeterministicInput(f"state {s.id} has no outgoing evidence")
        for a, t in targets.items():
            if pooled[a] > 0:
                T[a, pos, index[t]] = pooled[a] / mass
    alphabet = getattr(store, "alphabet", None) or Alphabet(tuple(str(i) for i in range(k)))
    machine = EpsilonMachine(
        alphabet=alphabet,
        T=T,
        state_suffixes=[tuple(s.sorted_suffixes()) for s in states],
    )
    machine.validate()
    return machine


def _closed_classes(p: np.ndarray):
    n = p.shape[0]
    n_comp, labels = connected_components(
        coo_matrix(p > 0), directed=True, connection="strong"
    )
    closed = [True] * n_comp
    for i in range(n):
        for j in np.nonzero(p[i] > 0)[0]:
            if labels[j] != labels[i]:
                closed[labels[i]] = False
    return [
        np.nonzero(labels == c)[0]
        for c in range(n_comp)
        if closed[c] and np.any(labels == c)
    ]


def _solve_stationary(p: np.ndarray) -> np.ndarray:
    n = p.shape[0]
    if n == 1:
        return np.ones(1)
    a = p.T - np.eye(n)
    a[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    pi = np.linalg.solve(a, b)
    pi = np.clip(pi, 0.0, None)
    pi /= pi.sum()
    for _ in range(10000):
        if np.max(np.abs(pi @ p - pi)) < 1e-12:
            break
        pi = pi @ p
        pi /= pi.sum()
    return pi


def stationary_vector(m: EpsilonMachine) -> np.ndarray:
    """The unique pi with pi P = pi; Reducible if several closed classes."""
    p = m.state_matrix()
    classes = _closed_classes(p)
    if len(classes) != 1 or len(classes[0]) != m.n_states:
        dists = []
        for idx in classes:
            sub = p[np.ix_(idx, idx)]
            dists.append((idx.tolist(), _solve_stationary(sub).tolist()))
        raise Reducible(dists)
    return _solve_stationary(p)


def stationary_distribution(m: EpsilonMachine) -> Distribution:
    pi = stationary_vector(m)
    return Distribution(tuple((i, float(p)) for i, p in enumerate(pi)))


def _entropy_bits(probs) -> float:
    probs = np.asarray(probs, dtype=float)
    positive = probs[probs > 0]
    return float(-(positive * np.log2(positive)).sum())


def statistical_complexity(m: EpsilonMachine) -> float:
    """Shannon entropy of the stationary state distribution, in bits."""
    return _entropy_bits(stationary_vector(m))


def entropy_rate(m: EpsilonMachine) -> float:
    """Per-symbol unpredictability H[next symbol | state], in bits."""
    pi = stationary_vector(m)
    emit = m.emission_probs()
    return float(sum(pi[i] * _entropy_bits(emit[i]) for i in range(m.n_states)))


def word_distribution(m: EpsilonMachine, length: int) -> Distribution:
    """Stationary probability of every length-L word (zeros included)."""
    if length < 1:
        raise ValueError("length must be >= 1")
    pi = stationary_vector(m)
    outcomes = []

    def walk(word: Word, vec: np.ndarray):
        if len(word) == length:
            outcomes.append((word, float(vec.sum())))
            return
        for a in range(m.k):
            walk(word + (a,), vec @ m.T[a])

    walk((), pi)
    return Distribution(tuple(outcomes))


def variational_distance(p: Distribution, q: Distribution) -> float:
    """Total variation style distance d(P,Q) = sum |P(x) - Q(x)|, in [0, 2]."""
    pd, qd = p.as_dict(), q.as_dict()
    if set(pd) != set(qd):
        raise MismatchedSupport("distributions are over different outcome spaces")
    return float(sum(abs(pd[x] - qd[x]) for x in pd))


def entropy(d: Distribution) -> float:
    return _entropy_bits(d.probs())


def conditional_entropy(joint: Distribution) -> float:
    """H[X | Y] for a joint distribution over (x, y) pairs."""
    marginal_y: dict = {}
    for (x, y), p in joint.outcomes:
        marginal_y[y] = marginal_y.get(y, 0.0) + p
    return entropy(joint) - _entropy_bits(list(marginal_y.values()))


def mutual_information(joint: Distribution) -> float:
    """I[X ; Y] = H[X] - H[X | Y] for a joint distribution over pairs."""
    marginal_x: dict = {}
    for (x, y), p in joint.outcomes:
        marginal_x[x] = marginal_x.get(x, 0.0) + p
    return _entropy_bits(list(marginal_x.values())) - conditional_entropy(joint)


def export(m: EpsilonMachine, format: str = "json") -> str:
    if format == "json":
        return _to_json(m)
    if format == "dot":
        return _to_dot(m)
    raise ValueError(f"unknown export format {format!r}")


def _suffix_tokens(m: EpsilonMachine, w: Word) -> list[str]:
    return [m.alphabet.symbols[i] for i in w]


def _to_json(m: EpsilonMachine) -> str:
    doc = {
        "alphabet": list(m.alphabet.symbols),
        "states": [
            {"id": i, "suffixes": [_suffix_tokens(m, w) for w in m.state_suffixes[i]]}
            for i in range(m.n_states)
        ],
        "transitions": [
            {"from": i, "symbol": m.alphabet.symbols[a], "to": int(j), "prob": float(m.T[a, i, j])}
            for a in range(m.k)
            for i in range(m.n_states)
            for j in np.nonzero(m.T[a, i] > 0)[0]
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def _to_dot(m: EpsilonMachine) -> str:
    lines = ["digraph machine {", "  rankdir=LR;"]
    for i in range(m.n_states):
        lines.append(f'  s{i} [label="{i}", shape=circle];')
    for a in range(m.k):
        for i in range(m.n_states):
            for j in np.nonzero(m.T[a, i] > 0)[0]:
                label = f"{m.alphabet.symbols[a]} | {m.T[a, i, j]:.3f}"
                lines.append(f'  s{i} -> s{j} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)


def machine_from_json(text: str) -> EpsilonMachine:
    doc = json.loads(text)
    alphabet = Alphabet(tuple(doc["alphabet"]))
    sym_index = {tok: i for i, tok in enumerate(alphabet.symbols)}
    states = sorted(doc["states"], key=lambda s: s["id"])
    n = len(states)
    T = np.zeros((alphabet.k, n, n))
    for tr in doc["transitions"]:
        T[sym_index[tr["symbol"]], tr["from"], tr["to"]] = tr["prob"]
    suffixes = [
        tuple(sorted(tuple(sym_index[t] for t in w) for w in s["suffixes"]))
        for s in states
    ]
    return EpsilonMachine(alphabet=alphabet, T=T, state_suffixes=suffixes)
