"""Exception hierarchy for the composition codec.

Every error raised on a data path derives from :class:`CodecError` and
carries a short stable ``code`` used by the CLI for one-line diagnostics.
"""


class CodecError(Exception):
    """Base class for all data errors raised by this package."""

    code = "codec-error"


class MalformedInput(CodecError):
    """A document or bit string cannot even be read structurally."""

    code = "malformed-input"

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InvalidMultiset(CodecError):
    """A composition multiset fails cardinality or shape validation."""

    code = "invalid-multiset"


class SymmetryViolation(CodecError):
    """Cumulative weights are not mirror symmetric."""

    code = "symmetry-violation"


class SigmaOutOfRange(CodecError):
    """A recovered pair weight falls outside its admissible range."""

    code = "sigma-out-of-range"


class InconsistentMultiset(CodecError):
    """A multiset operation or reconstruction step cannot be satisfied."""

    code = "inconsistent-multiset"


class DimensionMismatch(CodecError):
    code = "dimension-mismatch"


class InvalidSequence(CodecError):
    """A pair-symbol sequence violates the ballot condition."""

    code = "invalid-sequence"


class RankOutOfRange(CodecError):
    code = "rank-out-of-range"


class CapacityExceeded(CodecError):
    code = "capacity-exceeded"


class NotACodeword(CodecError):
    code = "not-a-codeword"


class TooLarge(CodecError):
    """An exhaustive operation was asked to run beyond its size guard."""

    code = "too-large"


class NoValidPadding(CodecError):
    """No redundant-bit choice satisfies the checksum (parameter bug)."""

    code = "no-valid-padding"


class Uncorrectable(CodecError):
    """The received multiset is not within one composition error of a codeword."""

    code = "uncorrectable"


class AmbiguousDecode(CodecError):
    """More than one codeword survived decoding; signals a model violation."""

    code = "ambiguous-decode"


class InvalidError(CodecError):
    """An error specification does not apply to the given multiset."""

    code = "invalid-error"


class NoAdmissibleError(CodecError):
    code = "no-admissible-error"
