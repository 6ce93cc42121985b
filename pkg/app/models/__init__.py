"""
Models package initialization.
Exports the data types shared by the codec, the analyzer and the CLI.
"""

from app.models.bits import as_bits, bits_to_str, int_to_bits
from app.models.report import (
    AnalysisReport,
    ChannelEvent,
    ConstraintResult,
    CorrectedError,
    DecodeReport,
    EventKind,
)
from app.models.archive import StrandArchive

__all__ = [
    'as_bits',
    'bits_to_str',
    'int_to_bits',
    'AnalysisReport',
    'ChannelEvent',
    'ConstraintResult',
    'CorrectedError',
    'DecodeReport',
    'EventKind',
    'StrandArchive'
]
