"""Documents, word sequences, and the canonical byte form handed to the compressor.

Tokenization is deliberately dumb: maximal runs of non-whitespace characters,
punctuation attached, case preserved. Anything smarter would normalize away
part of the byte-pattern signal the compression meter keys on.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyDocumentError

SEPARATOR = " "


@dataclass(frozen=True)
class Document:
    """A decoded text plus an opaque label for reports."""

    content: str
    source_id: str = "<inline>"


@dataclass(frozen=True)
class WordSequence:
    """Ordered word tokens of a document; the object the shuffler permutes."""

    words: tuple[str, ...]

    @property
    def n_words(self) -> int:
        return len(self.words)


def load_document(path: str | Path, encoding: str = "utf-8") -> Document:
    """Read a file as a Document.

    Decoding is strict: an invalid byte raises UnicodeDecodeError rather than
    being repaired, so a mis-encoded corpus is rejected instead of silently
    scored on mojibake. Pass a single-byte encoding (e.g. latin-1) for legacy
    corpora.
    """
    p = Path(path)
    return Document(content=p.read_text(encoding=encoding, errors="strict"), source_id=p.name)


def tokenize(doc: Document) -> WordSequence:
    """Split a document into maximal runs of non-whitespace characters.

    Raises EmptyDocumentError when no token is produced.
    """
    words = doc.content.split()
    if not words:
        raise EmptyDocumentError(f"{doc.source_id}: no word tokens")
    return WordSequence(words=tuple(words))


def serialize(seq: WordSequence) -> bytes:
    """Canonical byte form: tokens joined by single spaces, UTF-8 encoded.

    All shuffled states of one document serialize to the same byte length, so
    compressed volumes are compared like-for-like regardless of how the raw
    file spaced its words.
    """
    if seq.n_words < 1:
        raise EmptyDocumentError("cannot serialize an empty word sequence")
    return SEPARATOR.join(seq.words).encode("utf-8")


def symbol_count(doc: Document) -> int:
    """Document length in symbols (decoded characters, not bytes)."""
    return len(doc.content)


def truncate_to_words(content: str, limit: int) -> str:
    """Cut content to at most `limit` symbols, then back to a word boundary.

    A cut that lands inside a word drops the partial word, so the compressor
    never sees a truncated token it would treat as a novel pattern.
    """
    if limit >= len(content):
        return content
    prefix = content[:limit]
    if prefix and not prefix[-1].isspace() and not content[limit].isspace():
        prefix = prefix[: len(prefix) - len(prefix.split()[-1])] if prefix.split() else ""
    return prefix
