"""Batch scoring of document collections and real-vs-artificial comparisons."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import AnalysisOptions, Verdict, analyze_document
from .errors import EmptyCorpusError, EmptyDocumentError, TooFewWordsError
from .text import Document, symbol_count

LARGE_SYMBOL_FLOOR = 5000


@dataclass(frozen=True)
class CorpusEntry:
    source_id: str
    chi: float | None
    symbols: int
    verdict: Verdict


@dataclass(frozen=True)
class CorpusReport:
    """Per-document scores sorted best-first, plus corpus-level aggregates."""

    entries: tuple[CorpusEntry, ...]
    pass_fraction: float
    failing_mean_symbols: float | None
    threshold: float
    run_config: dict


@dataclass(frozen=True)
class GroupSummary:
    count: int
    min_chi: float
    mean_chi: float
    max_chi: float


@dataclass(frozen=True)
class GroupComparison:
    real: GroupSummary
    artificial: GroupSummary
    overlap: int
    min_real_chi_large: float
    large_symbol_floor: int


def analyze_corpus(
    docs: list[Document],
    base_seed: int | None = None,
    options: AnalysisOptions = AnalysisOptions(),
) -> CorpusReport:
    """Score every document with its own seed (base_seed XOR input ordinal).

    A document's score is a function of its content and its own seed only, so
    any entry can be reproduced by a standalone run with that derived seed.
    Documents with fewer than two words are kept in the report with verdict
    "skipped" and count against pass_fraction; dropping them would hide
    exactly the short documents that fail the criterion.
    """
    if not docs:
        raise EmptyCorpusError("no documents to analyze")
    if base_seed is None:
        base_seed = options.seed
    threshold = options.threshold
    entries = []
    for ordinal, doc in enumerate(docs):
        try:
            report, _ = analyze_document(doc, options.with_seed(base_seed ^ ordinal))
            entries.append(
                CorpusEntry(doc.source_id, report.chi, report.symbols, report.verdict)
            )
        except (EmptyDocumentError, TooFewWordsError):
            entries.append(
                CorpusEntry(doc.source_id, None, symbol_count(doc), Verdict.SKIPPED)
            )
    entries.sort(key=lambda e: (e.chi is None, -(e.chi or 0.0), e.source_id))
    scored = [e for e in entries if e.chi is not None]
    passes = sum(1 for e in scored if e.chi > threshold)
    failing = [e.symbols for e in scored if e.chi <= threshold]
    run_config = options.describe()
    run_config["seed"] = base_seed  # per-document seeds derive from it by XOR
    return CorpusReport(
        entries=tuple(entries),
        pass_fraction=passes / len(entries),
        failing_mean_symbols=sum(failing) / len(failing) if failing else None,
        threshold=threshold,
        run_config=run_config,
    )


def rank_distribution(report: CorpusReport) -> list[tuple[int, float]]:
    """(rank, chi) pairs, rank 1 = highest chi; skipped entries carry no rank."""
    if not report.entries:
        raise EmptyCorpusError("empty report")
    return [
        (rank, entry.chi)
        for rank, entry in enumerate(
            (e for e in report.entries if e.chi is not None), 1
        )
    ]


def _summarize(entries: list[CorpusEntry]) -> GroupSummary:
    chis = [e.chi for e in entries if e.chi is not None]
    if not chis:
        raise EmptyCorpusError("group has no scored documents")
    return GroupSummary(
        count=len(chis),
        min_chi=min(chis),
        mean_chi=sum(chis) / len(chis),
        max_chi=max(chis),
    )


def compare_groups(
    real: CorpusReport,
    artificial: CorpusReport,
    large_symbol_floor: int = LARGE_SYMBOL_FLOOR,
) -> GroupComparison:
    """Side-by-side chi summary of a real corpus against an artificial one.

    overlap counts artificial documents whose chi reaches the weakest real
    document of substantial size (>= large_symbol_floor symbols); small real
    documents are excluded from that floor because low chi is expected of them
    regardless of coherence. When no real document is that large, the floor
    falls back to the whole real group.
    """
    real_summary = _summarize(list(real.entries))
    artificial_summary = _summarize(list(artificial.entries))
    large = [
        e.chi
        for e in real.entries
        if e.chi is not None and e.symbols >= large_symbol_floor
    ]
    floor = min(large) if large else real_summary.min_chi
    overlap = sum(
        1 for e in artificial.entries if e.chi is not None and e.chi >= floor
    )
    return GroupComparison(
        real=real_summary,
        artificial=artificial_summary,
        overlap=overlap,
        min_real_chi_large=floor,
        large_symbol_floor=large_symbol_floor,
    )
