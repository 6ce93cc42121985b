"""
Strand codec - message <-> strand pipeline.

Encoding chains VT encoding, kernel mapping, homomorphism expansion and
the base map. Decoding reads the first bit of every received base,
drops the first one (it always carries the constant g_1 = 1) and hands
the rest to the VT decoder picked by length.
"""

from typing import Tuple
import logging

import numpy as np

from app.core.dnamap import first_bits, from_strand, to_strand, validate_strand
from app.core.errors import UncorrectableError
from app.core.kernel import expand, kernel_encode, verify_redundancy
from app.core.params import CodeParams
from app.core.vt import (
    correct_deletion,
    correct_insertion,
    correct_substitution,
    extract_message,
    vt_encode,
)
from app.models.bits import BitsLike, bits_to_str
from app.models.report import CorrectedError, DecodeReport

logger = logging.getLogger('StrandCodec')


def encode_strand(message: BitsLike, params: CodeParams) -> str:
    """Encode an l-bit message into an n-base strand."""
    vt_word = vt_encode(message, params)
    return to_strand(expand(kernel_encode(vt_word), params))


def decode_strand(received: str, params: CodeParams, index=None) -> Tuple[np.ndarray, DecodeReport]:
    """
    Decode a strand carrying at most one deletion, insertion or substitution.

    Args:
        received: Received bases, length n - 1, n or n + 1
        params: Code parameters
        index: Optional archive index, copied into the report and errors

    Returns:
        Tuple of (message bits, DecodeReport)

    Raises:
        AlphabetError: If the strand holds a character outside ACGT
        UncorrectableError: If the length or the error pattern is outside
            the single-error contract
    """
    report = DecodeReport(index=index)
    strand = validate_strand(received)
    n = params.n

    if len(strand) not in (n - 1, n, n + 1):
        report.failed = True
        raise UncorrectableError(
            f"uncorrectable length: got {len(strand)} bases, expected {n - 1}..{n + 1}",
            report=report,
            index=index,
        )

    bits = first_bits(strand)
    if len(strand) == n:
        if bits[0] != 1:
            report.warnings.append('leading bit is not 1')
        report.redundancy_violations = verify_redundancy(from_strand(strand), params)

    body = bits[1:]
    try:
        if len(strand) == n - 1:
            correction = correct_deletion(body, params)
            report.corrected_error = CorrectedError.DELETION
        elif len(strand) == n + 1:
            correction = correct_insertion(body, params)
            report.corrected_error = CorrectedError.INSERTION
        else:
            correction = correct_substitution(body, params)
            if correction.position is not None:
                report.corrected_error = CorrectedError.SUBSTITUTION
    except UncorrectableError as e:
        report.failed = True
        logger.warning(f"Strand {index if index is not None else '-'} uncorrectable: {e}")
        raise UncorrectableError(str(e), report=report, index=index) from e

    if correction.position is not None:
        report.detail = {'vt_position': correction.position, 'bit': correction.bit}

    if len(strand) == n:
        parity = int(kernel_encode(correction.word)[-1])
        if parity != int(from_strand(strand)[n]):
            report.warnings.append('kernel parity bit disagrees with decoded word')

    message = extract_message(correction.word, params)
    logger.debug(
        f"Decoded {strand} -> {bits_to_str(message)} ({report.corrected_error.value})"
    )
    return message, report
