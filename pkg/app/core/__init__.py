"""
Core package - code construction, decoding, analysis and channel logic.

Modules: params, vt, kernel, dnamap, codec, analysis, channel, framing,
command_registry.
"""

from app.core.errors import (
    AlphabetError,
    ArchiveFormatError,
    ChannelError,
    CodebookCapError,
    CodecError,
    DistanceError,
    ParameterError,
    UncorrectableError,
)

__all__ = [
    'AlphabetError',
    'ArchiveFormatError',
    'ChannelError',
    'CodebookCapError',
    'CodecError',
    'DistanceError',
    'ParameterError',
    'UncorrectableError'
]
