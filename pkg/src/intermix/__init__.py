"""intermix: scores how much of a text's compressibility lives in its word order.

A document is tokenized, progressively shuffled by seeded atomic swaps, and
each shuffle state is compressed with a deterministic sliding-window parser.
Coherent text loses compressible structure as order is destroyed, so its
volume curve climbs to a plateau; a bag of words does not. The plateau-mean
to original-volume ratio is the score, and scores above 1 mark real text.
"""

from .analysis import (
    AnalysisOptions,
    ChiReport,
    Verdict,
    VolumeCurve,
    analyze_document,
    chi,
    chi_vs_length,
    classify,
    volume_curve,
)
from .corpus import (
    CorpusEntry,
    CorpusReport,
    GroupComparison,
    GroupSummary,
    analyze_corpus,
    compare_groups,
    rank_distribution,
)
from .errors import (
    BackendUnavailableError,
    CorruptTokenStreamError,
    DegenerateCurveError,
    EmptyCorpusError,
    EmptyDocumentError,
    EmptyInputError,
    FragmentTooLongError,
    IndexOutOfRangeError,
    IntermixError,
    TooFewWordsError,
)
from .lz import (
    Backend,
    CompressedVolume,
    CompressorConfig,
    Literal,
    LzToken,
    Match,
    TokenStream,
    compress_via_backend,
    compressed_size,
    lz_decode,
    lz_parse,
)
from .rng import Xorshift64Star
from .shuffle import IntermixSchedule, atomic_swap, intermix_states
from .text import (
    Document,
    WordSequence,
    load_document,
    serialize,
    symbol_count,
    tokenize,
    truncate_to_words,
)
from .zipf import (
    ZipfVocabulary,
    build_vocabulary,
    empirical_rank_frequency,
    generate_document,
    generate_text,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisOptions",
    "Backend",
    "BackendUnavailableError",
    "ChiReport",
    "CompressedVolume",
    "CompressorConfig",
    "CorpusEntry",
    "CorpusReport",
    "CorruptTokenStreamError",
    "DegenerateCurveError",
    "Document",
    "EmptyCorpusError",
    "EmptyDocumentError",
    "EmptyInputError",
    "FragmentTooLongError",
    "GroupComparison",
    "GroupSummary",
    "IndexOutOfRangeError",
    "IntermixError",
    "IntermixSchedule",
    "Literal",
    "LzToken",
    "Match",
    "TokenStream",
    "TooFewWordsError",
    "Verdict",
    "VolumeCurve",
    "WordSequence",
    "Xorshift64Star",
    "ZipfVocabulary",
    "analyze_corpus",
    "analyze_document",
    "atomic_swap",
    "build_vocabulary",
    "chi",
    "chi_vs_length",
    "classify",
    "compare_groups",
    "compress_via_backend",
    "compressed_size",
    "empirical_rank_frequency",
    "generate_document",
    "generate_text",
    "intermix_states",
    "load_document",
    "lz_decode",
    "lz_parse",
    "rank_distribution",
    "serialize",
    "symbol_count",
    "tokenize",
    "truncate_to_words",
    "volume_curve",
]
