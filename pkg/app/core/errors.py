"""
Exception hierarchy for the codec.

Every error is a ValueError: each one describes bad input (a strand,
parameter, mix or archive) and can be caught as such.
"""

from typing import Optional


class CodecError(ValueError):
    """Base class for all codec errors."""


class ParameterError(CodecError):
    """Invalid code parameter (strand length, message length, thresholds)."""


class AlphabetError(CodecError):
    """A strand contains a character outside {A, C, G, T}."""


class DistanceError(CodecError):
    """Distance requested between sequences of different lengths."""


class UncorrectableError(CodecError):
    """
    A received word or strand lies outside the single-error contract.

    Attributes:
        report: DecodeReport collected before the failure (may be None)
        index: 0-based strand index inside an archive (None for single strands)
    """

    def __init__(self, message: str, report=None, index: Optional[int] = None):
        if index is not None:
            message = f"strand {index}: {message}"
        super().__init__(message)
        self.report = report
        self.index = index


class CodebookCapError(CodecError):
    """Codebook enumeration refused because 2^l exceeds the cap."""

    def __init__(self, code_size: int, cap: int):
        super().__init__(
            f"codebook has {code_size} codewords, exceeding cap {cap}; "
            f"rerun with cap >= {code_size}"
        )
        self.required_cap = code_size
        self.cap = cap


class ChannelError(CodecError):
    """Invalid channel event or error mix."""


class ArchiveFormatError(CodecError):
    """Strand archive text does not follow the archive format."""
