"""Exception types raised by the intermix core."""


class IntermixError(Exception):
    """Base class for all intermix errors."""


class EmptyDocumentError(IntermixError):
    """Document produced no tokens."""


class TooFewWordsError(IntermixError):
    """Document has fewer words than the operation requires."""


class IndexOutOfRangeError(IntermixError):
    """Swap index outside [1, N]."""


class EmptyInputError(IntermixError):
    """Compressor received an empty byte sequence."""


class CorruptTokenStreamError(IntermixError):
    """Token stream references bytes that were never emitted."""


class BackendUnavailableError(IntermixError):
    """Requested compression backend is not usable in this environment."""


class DegenerateCurveError(IntermixError):
    """Volume curve cannot support the ratio (V(0) = 0)."""


class FragmentTooLongError(IntermixError):
    """Requested fragment length exceeds the document length."""


class EmptyCorpusError(IntermixError):
    """Corpus operation invoked with no documents."""
