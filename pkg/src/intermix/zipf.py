"""Artificial texts: rank-frequency weights follow a power law, word order is i.i.d.

These are the negative control. They satisfy the same rank-frequency shape as
natural language, but carry no word-order structure for the compressor to key
on, so their plateau ratio hovers at 1.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from typing import NamedTuple

from .rng import Xorshift64Star
from .text import Document, tokenize

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
MAX_WORD_LETTERS = 12
WEIGHT_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ZipfVocabulary:
    """Distinct pseudowords with normalized rank weights w(r) proportional to r^-s."""

    words: tuple[str, ...]
    weights: tuple[float, ...]
    exponent: float

    def __post_init__(self):
        if not self.words:
            raise ValueError("vocabulary cannot be empty")
        if len(self.words) != len(self.weights):
            raise ValueError("words and weights must align")
        if len(set(self.words)) != len(self.words):
            raise ValueError("vocabulary words must be distinct")
        if any(not w or len(w) > MAX_WORD_LETTERS for w in self.words):
            raise ValueError(f"word lengths must lie in 1..{MAX_WORD_LETTERS}")
        if any(b >= a for a, b in zip(self.weights, self.weights[1:])):
            raise ValueError("weights must be strictly decreasing in rank")
        if abs(math.fsum(self.weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ValueError("weights must sum to 1")

    @property
    def size(self) -> int:
        return len(self.words)


class RankedWord(NamedTuple):
    rank: int
    word: str
    count: int


def build_vocabulary(
    size: int, prng: Xorshift64Star, exponent: float = 1.0
) -> ZipfVocabulary:
    """Generate `size` distinct pseudowords and attach rank weights.

    Word length is uniform in 1..12, letters uniform over a-z, duplicates are
    redrawn whole. Rank follows generation order; weight of rank r is
    r^-exponent normalized over the vocabulary.
    """
    if size < 1:
        raise ValueError(f"vocabulary size must be >= 1, got {size}")
    if exponent <= 0:
        raise ValueError(f"exponent must be positive, got {exponent}")
    seen: set[str] = set()
    words: list[str] = []
    while len(words) < size:
        letters = prng.next_index(MAX_WORD_LETTERS)
        word = "".join(ALPHABET[prng.next_index(26) - 1] for _ in range(letters))
        if word not in seen:
            seen.add(word)
            words.append(word)
    raw = [r ** -exponent for r in range(1, size + 1)]
    norm = math.fsum(raw)
    return ZipfVocabulary(
        words=tuple(words),
        weights=tuple(w / norm for w in raw),
        exponent=exponent,
    )


def generate_text(
    vocab: ZipfVocabulary,
    target_symbols: int,
    prng: Xorshift64Star,
    source_id: str = "zipf",
) -> Document:
    """Draw words i.i.d. by weight until the text reaches target_symbols.

    Words join with single spaces; generation stops at the first word that
    pushes the symbol count to the target or past it, so the result is at most
    one maximal word longer than requested.
    """
    if target_symbols < 1:
        raise ValueError(f"target_symbols must be >= 1, got {target_symbols}")
    cumulative = list(accumulate(vocab.weights))
    last = vocab.size - 1
    words: list[str] = []
    length = 0
    while length < target_symbols:
        draw = bisect_right(cumulative, prng.next_unit())
        word = vocab.words[draw if draw <= last else last]
        words.append(word)
        length += len(word) if length == 0 else len(word) + 1
    return Document(content=" ".join(words), source_id=source_id)


def generate_document(
    vocab_size: int,
    exponent: float,
    target_symbols: int,
    seed: int,
    source_id: str | None = None,
) -> Document:
    """One artificial document as a pure function of its seed.

    The vocabulary and the word draws consume a single PRNG stream, so the
    document is reproducible from (vocab_size, exponent, target_symbols, seed)
    alone.
    """
    prng = Xorshift64Star(seed)
    vocab = build_vocabulary(vocab_size, prng, exponent)
    return generate_text(
        vocab,
        target_symbols,
        prng,
        source_id=source_id if source_id is not None else f"zipf-{seed}",
    )


def empirical_rank_frequency(doc: Document) -> list[RankedWord]:
    """Token frequencies ranked descending, ties broken lexicographically."""
    counts = Counter(tokenize(doc).words)
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [RankedWord(rank, word, count) for rank, (word, count) in enumerate(ordered, 1)]
