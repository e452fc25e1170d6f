"""Single-pass word counting up to length lmax+1.

All next-symbol estimates downstream are read from this table. Counting is
suffix-closed: one sliding window of length lmax+1 is moved through each
sequence and, at every stop, the window's trailing word of every length
1..lmax+1 is counted. This keeps the number of counted windows identical at
every length (boundary words near the start of a sequence are not counted at
short lengths), which aligns parent and child counts exactly.

Storage is a flat hash map from word (tuple of symbol indices) to count; the
tree structure over words is recoverable from the keys.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LmaxTooLargeForData, WordTooLong
from .ingest import SymbolSequence

Word = tuple[int, ...]

# bincount is used while the packed-code space stays small; beyond this the
# counter falls back to sort-based np.unique.
_BINCOUNT_LIMIT = 1 << 22


@dataclass
class CountStore:
    """Counts nu(w) for every observed word w with len(w) <= lmax+1."""

    k: int
    lmax: int
    table: dict[Word, int] = field(repr=False)
    totals: dict[int, int]
    n_sequences: int = 1
    alphabet: object = None

    def count(self, w: Word) -> int:
        if len(w) > self.lmax + 1:
            raise WordTooLong(f"word of length {len(w)} exceeds lmax+1 = {self.lmax + 1}")
        return self.table.get(tuple(w), 0)

    def next_counts(self, w: Word) -> np.ndarray:
        """nu(wa) for each symbol a; the morph numerators for suffix w."""
        if len(w) > self.lmax:
            raise WordTooLong(f"suffix of length {len(w)} exceeds lmax = {self.lmax}")
        w = tuple(w)
        return np.array([self.table.get(w + (a,), 0) for a in range(self.k)], dtype=np.float64)

    def words_of_length(self, length: int) -> list[Word]:
        return sorted(w for w in self.table if len(w) == length)

    def dump_csv(self, fh):
        fh.write("word,count\n")
        for w in sorted(self.table):
            fh.write("%s,%d\n" % ("".join(str(s) for s in w), self.table[w]))


def build_counts(seqs: list[SymbolSequence], lmax: int) -> CountStore:
    """Count all suffix-closed sliding windows of each sequence.

    Sequences shorter than lmax+1 contribute only their shorter words (their
    window length is capped at the sequence length). Runs in O(N * lmax).
    """
    if lmax < 1:
        raise ValueError("lmax must be >= 1")
    if isinstance(seqs, SymbolSequence):
        seqs = [seqs]
    if not seqs:
        raise LmaxTooLargeForData("no sequences given")
    k = seqs[0].alphabet.k
    if not any(s.n >= lmax + 1 for s in seqs):
        raise LmaxTooLargeForData(
            f"no sequence long enough for a window of length {lmax + 1}"
        )

    table: dict[Word, int] = {}
    totals = {length: 0 for length in range(1, lmax + 2)}
    for seq in seqs:
        width = min(lmax + 1, seq.n)
        if width < 1:
            continue
        _count_one(seq.data, k, width, table, totals)
    return CountStore(
        k=k,
        lmax=lmax,
        table=table,
        totals=totals,
        n_sequences=len(seqs),
        alphabet=seqs[0].alphabet,
    )


def _count_one(data: np.ndarray, k: int, width: int, table, totals):
    n = data.size
    n_windows = n - width + 1
    codes = None  # big-endian packed value of the length-el word ending at i
    for el in range(1, width + 1):
        if codes is None:
            codes = data.astype(np.int64)
        else:
            codes = codes[:-1] * k + data[el - 1 :]
        valid = codes[width - el :]  # ends inside a full window
        space = k**el
        if space <= _BINCOUNT_LIMIT:
            freq = np.bincount(valid, minlength=space)
            seen = np.nonzero(freq)[0]
            pairs = zip(seen.tolist(), freq[seen].tolist())
        else:
            seen, freq = np.unique(valid, return_counts=True)
            pairs = zip(seen.tolist(), freq.tolist())
        for code, cnt in pairs:
            word = _unpack(code, el, k)
            table[word] = table.get(word, 0) + cnt
        totals[el] += n_windows


def _unpack(code: int, length: int, k: int) -> Word:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        out[pos] = code % k
        code //= k
    return tuple(out)


def store_from_table(table: dict, k: int, lmax: int) -> CountStore:
    """Build a store directly from a word->count mapping (tests, goldens).

    Keys may be strings of digit characters or tuples of indices.
    """
    norm: dict[Word, int] = {}
    for key, cnt in table.items():
        word = tuple(int(c) for c in key) if isinstance(key, str) else tuple(key)
        if len(word) > lmax + 1:
            raise WordTooLong(f"table key {key!r} longer than lmax+1")
        norm[word] = int(cnt)
    totals = {
        length: sum(c for w, c in norm.items() if len(w) == length)
        for length in range(1, lmax + 2)
    }
    return CountStore(k=k, lmax=lmax, table=norm, totals=totals)
