"""Reading and validating symbol sequences.

Sequences are stored as integer index arrays against an explicitly declared
alphabet. The alphabet is never inferred from data: symbols that happen to be
absent from a sample must still occupy a slot in every estimated
next-symbol distribution, so the distribution dimension is fixed up front.

File format: UTF-8 text. In ``chars`` mode every non-newline character is one
symbol; in ``tokens`` mode symbols are whitespace-separated. In both modes a
blank line separates independent sequences (no statistics are collected
across the boundary).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyInput, IoError, UnknownSymbol

FORMATS = ("chars", "tokens")


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbol tokens.

    The ordering is canonical for the lifetime of a run: cumulative
    distributions used by the KS test depend on it.
    """

    symbols: tuple[str, ...]

    def __post_init__(self):
        if len(self.symbols) == 0:
            raise EmptyInput("alphabet has no symbols")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @property
    def k(self) -> int:
        return len(self.symbols)

    def index(self, token: str) -> int:
        try:
            return self.symbols.index(token)
        except ValueError:
            raise UnknownSymbol(-1, token) from None

    def require_reconstructable(self):
        if self.k < 2:
            raise ValueError("reconstruction needs an alphabet of k >= 2 symbols")


def alphabet_from_spec(spec: str) -> Alphabet:
    """Parse an alphabet CLI spec: comma-separated tokens, or one char per symbol."""
    if "," in spec:
        symbols = tuple(tok for tok in (t.strip() for t in spec.split(",")) if tok)
    else:
        symbols = tuple(spec.strip())
    return Alphabet(symbols)


@dataclass(frozen=True)
class SymbolSequence:
    """A validated sequence of alphabet indices."""

    data: np.ndarray = field(repr=False)
    alphabet: Alphabet

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.int64)
        object.__setattr__(self, "data", arr)
        if arr.ndim != 1:
            raise ValueError("sequence data must be one-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= self.alphabet.k):
            raise ValueError("sequence contains out-of-range symbol indices")

    @property
    def n(self) -> int:
        return int(self.data.size)

    def tokens(self) -> list[str]:
        return [self.alphabet.symbols[i] for i in self.data]

    def render(self, format: str = "chars") -> str:
        """Inverse of parse_sequence for the same format."""
        sep = "" if format == "chars" else " "
        return sep.join(self.tokens())

    def __eq__(self, other):
        return (
            isinstance(other, SymbolSequence)
            and self.alphabet == other.alphabet
            and np.array_equal(self.data, other.data)
        )


def parse_sequence(raw: str, alphabet: Alphabet, format: str = "chars") -> SymbolSequence:
    """Map text to a SymbolSequence, validating every token.

    ``chars``: one character per symbol; newlines inside one logical sequence
    are ignored. ``tokens``: whitespace-separated tokens.
    """
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    if format == "chars":
        tokens = [ch for ch in raw if ch not in ("\n", "\r")]
    else:
        tokens = raw.split()
    if not tokens:
        raise EmptyInput("no symbols in input")
    lookup = {tok: i for i, tok in enumerate(alphabet.symbols)}
    indices = np.empty(len(tokens), dtype=np.int64)
    for pos, tok in enumerate(tokens):
        try:
            indices[pos] = lookup[tok]
        except KeyError:
            raise UnknownSymbol(pos, tok) from None
    return SymbolSequence(indices, alphabet)


def parse_multisequence(raw: str, alphabet: Alphabet, format: str = "chars") -> list[SymbolSequence]:
    """Split text on blank lines and parse each block independently."""
    blocks: list[list[str]] = [[]]
    for line in raw.splitlines():
        if line.strip():
            blocks[-1].append(line)
        elif blocks[-1]:
            blocks.append([])
    blocks = [b for b in blocks if b]
    if not blocks:
        raise EmptyInput("no symbols in input")
    return [parse_sequence("\n".join(b), alphabet, format) for b in blocks]


def load_multisequence(path, alphabet: Alphabet, format: str = "chars") -> list[SymbolSequence]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise IoError(str(exc)) from exc
    return parse_multisequence(raw, alphabet, format)


def write_sequences(path, seqs: list[SymbolSequence], format: str = "chars"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n\n".join(s.render(format) for s in seqs))
        fh.write("\n")
