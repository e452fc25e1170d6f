"""Sample-sequence generators for known machines (the test-bed processes).

Randomness comes from numpy's default_rng (PCG64, a documented, seedable
generator whose streams are stable across platforms), so golden sequences in
tests are reproducible bit for bit. The initial state defaults to a draw from
the stationary distribution so the output is stationary from the first
symbol.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import BadParameter
from .ingest import Alphabet, SymbolSequence
from .machine import EpsilonMachine, stationary_vector

BINARY = Alphabet(("0", "1"))


@dataclass
class ProcessSpec:
    machine: EpsilonMachine
    initial: object = "stationary"  # "stationary" or a fixed state index
    name: str = ""
    sync_length: int = 1  # shortest history length that can pin every state

    def __post_init__(self):
        if self.initial != "stationary" and not (
            isinstance(self.initial, (int, np.integer))
            and 0 <= self.initial < self.machine.n_states
        ):
            raise BadParameter(f"initial state {self.initial!r} does not exist")


def even_process() -> ProcessSpec:
    """Two-state sofic process forbidding a 0, an odd run of 1s, then a 0."""
    T = np.array([
        [[0.5, 0.0], [0.0, 0.0]],
        [[0.0, 0.5], [1.0, 0.0]],
    ])
    m = EpsilonMachine(alphabet=BINARY, T=T)
    return ProcessSpec(m, name="even", sync_length=3)


def iid_process(p: float) -> ProcessSpec:
    if not 0.0 < p < 1.0:
        raise BadParameter("iid parameter must be in (0, 1)")
    T = np.array([[[1.0 - p]], [[p]]])
    m = EpsilonMachine(alphabet=BINARY, T=T)
    return ProcessSpec(m, name=f"iid({p:g})", sync_length=1)


def period_process(p: int) -> ProcessSpec:
    """Deterministic cycle of length p emitting one 0 then p-1 ones."""
    if not (isinstance(p, (int, np.integer)) and p >= 1):
        raise BadParameter("period must be an integer >= 1")
    pattern = [0] + [1] * (p - 1)
    T = np.zeros((2, p, p))
    for i in range(p):
        T[pattern[i], i, (i + 1) % p] = 1.0
    m = EpsilonMachine(alphabet=BINARY, T=T)
    return ProcessSpec(m, name=f"period({p})", sync_length=max(p - 1, 1))


def golden_mean_process(p: float) -> ProcessSpec:
    """Two-state process forbidding consecutive 0s; P(0 | allowed) = p."""
    if not 0.0 < p < 1.0:
        raise BadParameter("golden_mean parameter must be in (0, 1)")
    T = np.array([
        [[0.0, p], [0.0, 0.0]],
        [[1.0 - p, 0.0], [1.0, 0.0]],
    ])
    m = EpsilonMachine(alphabet=BINARY, T=T)
    return ProcessSpec(m, name=f"golden_mean({p:g})", sync_length=1)


_BUILTINS = {
    "even": (even_process, 0),
    "iid": (iid_process, 1),
    "period": (period_process, 1),
    "golden_mean": (golden_mean_process, 1),
}


def builtin_process(name: str) -> ProcessSpec:
    """Look up a test-bed process: even, iid(p), period(p), golden_mean(p).

    Parameters may be given as name(p) or name:p.
    """
    match = re.fullmatch(r"\s*([a-z_]+)\s*(?:[(:]\s*([^)\s]+)\s*\)?)?\s*", name)
    if not match or match.group(1) not in _BUILTINS:
        raise BadParameter(f"unknown process {name!r}; expected one of {sorted(_BUILTINS)}")
    base, n_params = _BUILTINS[match.group(1)]
    arg = match.group(2)
    if n_params == 0:
        if arg is not None:
            raise BadParameter(f"process {match.group(1)!r} takes no parameter")
        return base()
    if arg is None:
        raise BadParameter(f"process {match.group(1)!r} needs a parameter")
    try:
        value = int(arg) if match.group(1) == "period" else float(arg)
    except ValueError:
        raise BadParameter(f"bad parameter {arg!r} for {match.group(1)!r}") from None
    return base(value)


def simulate(spec: ProcessSpec, n: int, seed) -> SymbolSequence:
    """Emit n symbols from the process, deterministically in (spec, n, seed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = spec.machine
    rng = np.random.default_rng(seed)
    if spec.initial == "stationary":
        pi = stationary_vector(m)
        state = int(np.searchsorted(np.cumsum(pi), rng.random(), side="right"))
        state = min(state, m.n_states - 1)
    else:
        state = int(spec.initial)

    emission = m.emission_probs()
    nxt = m.successor_table()
    uniforms = rng.random(n).tolist()
    out = np.empty(n, dtype=np.int64)

    if m.k == 2:
        p0 = emission[:, 0].tolist()
        nxt0 = nxt[:, 0].tolist()
        nxt1 = nxt[:, 1].tolist()
        for i, u in enumerate(uniforms):
            if u < p0[state]:
                out[i] = 0
                state = nxt0[state]
            else:
                out[i] = 1
                state = nxt1[state]
    else:
        cum = np.cumsum(emission, axis=1).tolist()
        nxt_rows = nxt.tolist()
        top = m.k - 1
        for i, u in enumerate(uniforms):
            row = cum[state]
            a = 0
            while a < top and u >= row[a]:
                a += 1
            out[i] = a
            state = nxt_rows[state][a]
    return SymbolSequence(out, m.alphabet)
