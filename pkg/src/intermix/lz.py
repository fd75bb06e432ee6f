"""Deterministic pattern-repetition meter: a greedy LZ77 parser with fixed token costs.

The builtin backend is the reference meter: its parse, and therefore every
volume it reports, is a pure function of (bytes, config). A gzip stream backend
is available as a cross-check; its sizes depend on the zlib build, so reports
always carry the encoder identification string.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from . import _lzkernel
from .errors import (
    BackendUnavailableError,
    CorruptTokenStreamError,
    EmptyInputError,
)

try:
    import gzip as _gzip
    import zlib as _zlib
except ImportError:  # pragma: no cover
    _gzip = None
    _zlib = None

DEFAULT_GZIP_LEVEL = 6


@dataclass(frozen=True)
class CompressorConfig:
    """Window and token-cost parameters of the builtin meter.

    Defaults mirror DEFLATE's bounds (32768-byte window, matches of 3..258)
    with flat bit prices: 9 bits per literal, 25 per match (flag + 15-bit
    offset + 9-bit length). Flat prices keep the reported volume a pure
    function of the parse, with no entropy-coding stage to specify.
    """

    window_size: int = 32768
    min_match: int = 3
    max_match: int = 258
    literal_cost: int = 9
    match_cost: int = 25

    def __post_init__(self):
        if self.min_match < 2:
            raise ValueError(f"min_match must be >= 2, got {self.min_match}")
        if self.max_match < self.min_match:
            raise ValueError("max_match must be >= min_match")
        if self.window_size < self.max_match:
            raise ValueError("window_size must be >= max_match")
        if self.literal_cost <= 0 or self.match_cost <= 0:
            raise ValueError("token bit costs must be positive")


DEFAULT_CONFIG = CompressorConfig()


@dataclass(frozen=True)
class Literal:
    value: int


@dataclass(frozen=True)
class Match:
    offset: int
    length: int


LzToken = Union[Literal, Match]


class Backend(str, Enum):
    BUILTIN_LZ = "builtin_lz"
    GZIP_STREAM = "gzip_stream"


@dataclass(frozen=True)
class CompressedVolume:
    size_bytes: int
    backend: Backend


class TokenStream(Sequence):
    """Immutable sequence of LzTokens backed by two parallel arrays.

    Parses of book-sized inputs run to hundreds of thousands of tokens, so the
    tokens are materialized as Literal/Match objects only on access.
    """

    __slots__ = ("_offsets", "_lengths")

    def __init__(self, offsets: np.ndarray, lengths: np.ndarray):
        self._offsets = offsets
        self._lengths = lengths

    @classmethod
    def from_tokens(cls, tokens: Iterable[LzToken]) -> "TokenStream":
        offs, lens = [], []
        for tok in tokens:
            if isinstance(tok, Literal):
                if not 0 <= tok.value <= 255:
                    raise ValueError(f"literal byte out of range: {tok.value}")
                offs.append(0)
                lens.append(tok.value)
            elif isinstance(tok, Match):
                if tok.offset < 1 or tok.length < 1:
                    raise ValueError(f"bad match token: {tok}")
                offs.append(tok.offset)
                lens.append(tok.length)
            else:
                raise TypeError(f"not an LzToken: {tok!r}")
        return cls(np.asarray(offs, np.int64), np.asarray(lens, np.int64))

    def __len__(self) -> int:
        return int(self._offsets.shape[0])

    def __getitem__(self, index):
        if isinstance(index, slice):
            return TokenStream(self._offsets[index], self._lengths[index])
        off = int(self._offsets[index])
        if off == 0:
            return Literal(int(self._lengths[index]))
        return Match(offset=off, length=int(self._lengths[index]))

    def __iter__(self) -> Iterator[LzToken]:
        for off, ln in zip(self._offsets.tolist(), self._lengths.tolist()):
            yield Literal(ln) if off == 0 else Match(offset=off, length=ln)

    def __eq__(self, other) -> bool:
        if isinstance(other, TokenStream):
            return bool(
                np.array_equal(self._offsets, other._offsets)
                and np.array_equal(self._lengths, other._lengths)
            )
        if isinstance(other, (list, tuple)):
            return len(self) == len(other) and all(a == b for a, b in zip(self, other))
        return NotImplemented

    @property
    def literal_count(self) -> int:
        return int(np.count_nonzero(self._offsets == 0))

    @property
    def match_count(self) -> int:
        return len(self) - self.literal_count

    def __repr__(self) -> str:
        return f"TokenStream({self.literal_count} literals, {self.match_count} matches)"


def _as_array(data: bytes) -> np.ndarray:
    arr = np.frombuffer(data, dtype=np.uint8)
    return arr


def lz_parse(data: bytes, cfg: CompressorConfig = DEFAULT_CONFIG) -> TokenStream:
    """Greedy left-to-right parse of `data`.

    At each position the longest match of at least cfg.min_match bytes within
    the trailing cfg.window_size bytes is emitted, the nearest offset winning
    ties; positions with no admissible match emit a literal. Decoding the
    result reproduces `data` exactly.
    """
    if len(data) == 0:
        raise EmptyInputError("cannot parse empty input")
    _, offs, lens = _lzkernel.parse(
        _as_array(data), cfg.window_size, cfg.min_match, cfg.max_match
    )
    return TokenStream(offs, lens)


def lz_decode(tokens: Iterable[LzToken]) -> bytes:
    """Expand tokens back into bytes; inverse of lz_parse for any config."""
    if isinstance(tokens, TokenStream):
        offs, lens = tokens._offsets, tokens._lengths
        total = int(np.where(offs == 0, 1, lens).sum())
        out, produced = _lzkernel.decode(offs, lens, total)
        if produced < 0:
            raise CorruptTokenStreamError("match offset precedes start of output")
        return out.tobytes()
    out = bytearray()
    for tok in tokens:
        if isinstance(tok, Literal):
            out.append(tok.value)
        elif isinstance(tok, Match):
            if tok.offset < 1 or tok.offset > len(out):
                raise CorruptTokenStreamError(
                    f"match offset {tok.offset} outside emitted range {len(out)}"
                )
            src = len(out) - tok.offset
            for step in range(tok.length):
                out.append(out[src + step])
        else:
            raise TypeError(f"not an LzToken: {tok!r}")
    return bytes(out)


def compressed_size(data: bytes, cfg: CompressorConfig = DEFAULT_CONFIG) -> CompressedVolume:
    """Volume of `data` under the builtin meter: ceil(token bits / 8)."""
    tokens = lz_parse(data, cfg)
    lit = tokens.literal_count
    bits = cfg.literal_cost * lit + cfg.match_cost * (len(tokens) - lit)
    return CompressedVolume(size_bytes=(bits + 7) // 8, backend=Backend.BUILTIN_LZ)


def compress_via_backend(
    data: bytes,
    backend: Backend = Backend.BUILTIN_LZ,
    cfg: CompressorConfig = DEFAULT_CONFIG,
    gzip_level: int = DEFAULT_GZIP_LEVEL,
) -> CompressedVolume:
    """Volume of `data` under the selected backend."""
    if len(data) == 0:
        raise EmptyInputError("cannot compress empty input")
    if backend == Backend.BUILTIN_LZ:
        return compressed_size(data, cfg)
    if backend == Backend.GZIP_STREAM:
        if _gzip is None:  # pragma: no cover
            raise BackendUnavailableError("no gzip-compatible encoder in this environment")
        if not 1 <= gzip_level <= 9:
            raise ValueError(f"gzip level must be in 1..9, got {gzip_level}")
        member = _gzip.compress(data, compresslevel=gzip_level, mtime=0)
        return CompressedVolume(size_bytes=len(member), backend=Backend.GZIP_STREAM)
    raise BackendUnavailableError(f"unknown backend: {backend!r}")


def encoder_id(
    backend: Backend,
    cfg: CompressorConfig = DEFAULT_CONFIG,
    gzip_level: int = DEFAULT_GZIP_LEVEL,
) -> str:
    """Provenance string recorded in reports."""
    if backend == Backend.BUILTIN_LZ:
        return (
            f"builtin_lz(window={cfg.window_size},match={cfg.min_match}..{cfg.max_match},"
            f"literal={cfg.literal_cost}b,match_token={cfg.match_cost}b)"
        )
    if _zlib is None:  # pragma: no cover
        raise BackendUnavailableError("no gzip-compatible encoder in this environment")
    return f"gzip(zlib-{_zlib.ZLIB_VERSION},level={gzip_level})"
