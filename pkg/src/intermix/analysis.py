"""Volume curves, the plateau ratio, and the text-vs-word-set verdict.

A document is shuffled through its schedule of states, every state is
compressed, and the ratio of the saturation-plateau mean volume to the
unshuffled volume scores how much compressible word-order structure the
shuffling destroyed. Ratios above the threshold mark coherent text.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .errors import DegenerateCurveError, FragmentTooLongError, TooFewWordsError
from .lz import (
    DEFAULT_CONFIG,
    DEFAULT_GZIP_LEVEL,
    Backend,
    CompressorConfig,
    compress_via_backend,
    encoder_id,
)
from .rng import MASK64, Xorshift64Star
from .shuffle import IntermixSchedule, iter_intermix_states
from .text import Document, serialize, symbol_count, tokenize, truncate_to_words

DEFAULT_PLATEAU_START = 6
DEFAULT_THRESHOLD = 1.0


class Verdict(str, Enum):
    COHERENT_TEXT = "coherent_text"
    WORD_SET = "word_set"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class AnalysisOptions:
    """Everything that pins one reproducible analysis run."""

    seed: int = 42
    max_k: int = 20
    swap_divisor: int = 10
    plateau_start: int = DEFAULT_PLATEAU_START
    threshold: float = DEFAULT_THRESHOLD
    backend: Backend = Backend.BUILTIN_LZ
    gzip_level: int = DEFAULT_GZIP_LEVEL
    compressor: CompressorConfig = field(default_factory=CompressorConfig)

    def __post_init__(self):
        if not 0 <= self.plateau_start <= self.max_k:
            raise ValueError(
                f"plateau_start must lie in 0..max_k, got {self.plateau_start}"
            )

    def schedule(self) -> IntermixSchedule:
        return IntermixSchedule(max_k=self.max_k, divisor=self.swap_divisor)

    def with_seed(self, seed: int) -> "AnalysisOptions":
        return replace(self, seed=seed & MASK64)

    def describe(self) -> dict:
        """Provenance block embedded in reports."""
        return {
            "seed": self.seed,
            "max_k": self.max_k,
            "swap_divisor": self.swap_divisor,
            "plateau_start": self.plateau_start,
            "threshold": self.threshold,
            "backend": self.backend.value,
            "gzip_level": self.gzip_level,
            "encoder": encoder_id(self.backend, self.compressor, self.gzip_level),
        }


@dataclass(frozen=True)
class VolumeCurve:
    """Compressed sizes V(0)..V(K) of one document's shuffle states."""

    volumes: tuple[int, ...]
    swap_counts: tuple[int, ...]
    seed: int
    backend: Backend
    n_words: int
    symbols: int

    @property
    def max_k(self) -> int:
        return len(self.volumes) - 1


@dataclass(frozen=True)
class ChiReport:
    """Plateau-to-original volume ratio and the classification it implies."""

    chi: float
    v0: int
    plateau_mean: float
    plateau_k_start: int
    fluctuation_ratio: float
    verdict: Verdict
    symbols: int
    threshold: float


def volume_curve(
    doc: Document,
    schedule: IntermixSchedule,
    prng: Xorshift64Star,
    cfg: CompressorConfig = DEFAULT_CONFIG,
    backend: Backend = Backend.BUILTIN_LZ,
    gzip_level: int = DEFAULT_GZIP_LEVEL,
) -> VolumeCurve:
    """Compressed volume of the canonical byte form of every shuffle state."""
    seq = tokenize(doc)
    if seq.n_words < 2:
        raise TooFewWordsError(
            f"{doc.source_id}: volume curve needs >= 2 words, got {seq.n_words}"
        )
    vols = [
        compress_via_backend(serialize(state), backend, cfg, gzip_level).size_bytes
        for _, state in iter_intermix_states(seq, schedule, prng)
    ]
    return VolumeCurve(
        volumes=tuple(vols),
        swap_counts=tuple(schedule.swap_counts(seq.n_words)),
        seed=prng.seed,
        backend=backend,
        n_words=seq.n_words,
        symbols=symbol_count(doc),
    )


def chi(
    curve: VolumeCurve,
    plateau_start: int = DEFAULT_PLATEAU_START,
    threshold: float = DEFAULT_THRESHOLD,
) -> ChiReport:
    """Score a curve: plateau mean over V(0), with plateau fluctuation stats.

    fluctuation_ratio is the plateau's volume spread over the whole curve's
    spread; a globally constant curve maps to 0 by definition.
    """
    if not 0 <= plateau_start <= curve.max_k:
        raise ValueError(
            f"plateau_start {plateau_start} outside curve range 0..{curve.max_k}"
        )
    v0 = curve.volumes[0]
    if v0 <= 0:
        raise DegenerateCurveError("V(0) must be positive")
    plateau = curve.volumes[plateau_start:]
    plateau_mean = sum(plateau) / len(plateau)
    value = plateau_mean / v0
    full_range = max(curve.volumes) - min(curve.volumes)
    fluctuation = 0.0 if full_range == 0 else (max(plateau) - min(plateau)) / full_range
    return ChiReport(
        chi=value,
        v0=v0,
        plateau_mean=plateau_mean,
        plateau_k_start=plateau_start,
        fluctuation_ratio=fluctuation,
        verdict=Verdict.COHERENT_TEXT if value > threshold else Verdict.WORD_SET,
        symbols=curve.symbols,
        threshold=threshold,
    )


def classify(report: ChiReport, threshold: float = DEFAULT_THRESHOLD) -> Verdict:
    """Re-apply the verdict rule at a different threshold; strictly above passes."""
    return Verdict.COHERENT_TEXT if report.chi > threshold else Verdict.WORD_SET


def analyze_document(
    doc: Document, options: AnalysisOptions = AnalysisOptions()
) -> tuple[ChiReport, VolumeCurve]:
    """Full single-document run: fresh PRNG from options.seed, curve, then score."""
    curve = volume_curve(
        doc,
        options.schedule(),
        Xorshift64Star(options.seed),
        options.compressor,
        options.backend,
        options.gzip_level,
    )
    return chi(curve, options.plateau_start, options.threshold), curve


def chi_vs_length(
    doc: Document,
    fragment_lengths: list[int],
    options: AnalysisOptions = AnalysisOptions(),
) -> list[tuple[int, float]]:
    """Score prefixes of the document at the given symbol lengths.

    Each prefix is cut back to a word boundary and analyzed independently with
    a fresh PRNG from options.seed, so any single point reproduces a direct
    analysis of that prefix.
    """
    if not fragment_lengths:
        raise ValueError("fragment_lengths must be non-empty")
    if any(l <= 0 for l in fragment_lengths):
        raise ValueError("fragment lengths must be positive")
    if any(b <= a for a, b in zip(fragment_lengths, fragment_lengths[1:])):
        raise ValueError("fragment lengths must be strictly increasing")
    total = symbol_count(doc)
    too_long = [l for l in fragment_lengths if l > total]
    if too_long:
        raise FragmentTooLongError(
            f"{doc.source_id}: fragment length {too_long[0]} exceeds document "
            f"length {total}"
        )
    series = []
    for length in fragment_lengths:
        fragment = Document(
            content=truncate_to_words(doc.content, length),
            source_id=f"{doc.source_id}#{length}",
        )
        report, _ = analyze_document(fragment, options)
        series.append((length, report.chi))
    return series
