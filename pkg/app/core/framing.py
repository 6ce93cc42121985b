"""
Frame codec - byte stream <-> strand archive.

Payload bits are read most-significant-bit first, cut into l-bit
blocks (the last one zero padded) and each block becomes one strand.
"""

from typing import List, Tuple
import logging

import numpy as np

from app.core.codec import decode_strand, encode_strand
from app.core.errors import ParameterError, UncorrectableError
from app.core.params import CodeParams
from app.models.archive import StrandArchive
from app.models.report import DecodeReport

logger = logging.getLogger('FrameCodec')


def payload_to_blocks(payload: bytes, l: int) -> Tuple[np.ndarray, int]:
    """
    Split a payload into l-bit rows.

    Returns:
        Tuple of (blocks array of shape (count, l), payload bit count)
    """
    bits = np.unpackbits(np.frombuffer(bytes(payload), dtype=np.uint8))
    count = -(-bits.size // l)
    padded = np.zeros(count * l, dtype=np.uint8)
    padded[:bits.size] = bits
    return padded.reshape(count, l), int(bits.size)


def encode_stream(payload: bytes, params: CodeParams) -> StrandArchive:
    """Encode a byte payload into an archive of n-base strands."""
    blocks, payload_bits = payload_to_blocks(payload, params.l)
    strands = [encode_strand(block, params) for block in blocks]
    logger.info(f"Encoded {payload_bits} bits into {len(strands)} strands (n={params.n})")
    return StrandArchive(n=params.n, payload_bits=payload_bits, strands=strands)


def decode_stream(
    archive: StrandArchive,
    params: CodeParams,
    force: bool = False
) -> Tuple[bytes, List[DecodeReport]]:
    """
    Decode an archive back into its payload.

    Args:
        archive: Archive to decode
        params: Code parameters matching archive.n
        force: Keep going past uncorrectable strands, filling their
            blocks with zeros, instead of withholding the output

    Returns:
        Tuple of (payload bytes, one DecodeReport per strand)

    Raises:
        ParameterError: If the archive was written for another n, or its
            strand count does not match payload_bits
        UncorrectableError: If a strand cannot be decoded and force is off
    """
    if archive.n != params.n:
        raise ParameterError(f"archive uses n={archive.n}, decoder configured for n={params.n}")
    expected = -(-archive.payload_bits // params.l)
    if len(archive.strands) != expected:
        raise ParameterError(
            f"archive holds {len(archive.strands)} strands, {archive.payload_bits} bits need {expected}"
        )

    blocks = np.zeros((len(archive.strands), params.l), dtype=np.uint8)
    reports = []
    failures = 0
    for index, strand in enumerate(archive.strands):
        try:
            blocks[index], report = decode_strand(strand, params, index=index)
        except UncorrectableError as e:
            if not force:
                logger.error(f"Decoding stopped: {e}")
                raise
            failures += 1
            report = e.report or DecodeReport(index=index, failed=True)
            report.warnings.append(f"uncorrectable, block zero-filled: {e}")
        reports.append(report)

    bits = blocks.ravel()[:archive.payload_bits]
    payload = np.packbits(bits).tobytes()
    logger.info(
        f"Decoded {len(archive.strands)} strands into {len(payload)} bytes "
        f"({failures} uncorrectable)"
    )
    return payload, reports
