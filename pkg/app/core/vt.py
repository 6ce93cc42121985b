"""
Systematic Varshamov-Tenengolts code with modulus 2m + 1.

Codewords are the length-m bit strings whose weighted sum
sum(i * b_i) is 0 modulo 2m + 1. The deficiency of a word is the
amount still missing to reach that target, (-weighted_sum) mod (2m + 1).
With this modulus the code corrects one deletion, one insertion or
one substitution.
"""

from typing import List, NamedTuple, Optional, Sequence
import logging

import numpy as np

from app.core.errors import ParameterError, UncorrectableError
from app.core.params import CodeParams
from app.models.bits import BitsLike, as_bits, bits_to_str

logger = logging.getLogger('VtCodec')


class VtCorrection(NamedTuple):
    """Corrected VT word plus where the decoder acted (position is 1-indexed, None if untouched)."""

    word: np.ndarray
    position: Optional[int]
    bit: Optional[int]


def weighted_sum(bits: BitsLike, modulus: int) -> int:
    """Return sum(i * b_i) mod modulus with 1-indexed positions."""
    bits = as_bits(bits)
    positions = np.arange(1, bits.size + 1, dtype=np.int64)
    return int(np.dot(positions, bits.astype(np.int64)) % modulus)


def deficiency(bits: BitsLike, modulus: int) -> int:
    """Amount that must be added to the weighted sum to reach 0 mod modulus."""
    return (-weighted_sum(bits, modulus)) % modulus


def is_codeword(bits: BitsLike, params: CodeParams) -> bool:
    bits = as_bits(bits)
    return bits.size == params.m and weighted_sum(bits, params.vt_modulus) == 0


def partition_deficiency(d: int, parity_positions: Sequence[int]) -> List[int]:
    """
    Split a deficiency into distinct parity positions summing to it.

    The non-power extra position is used first when the powers of two
    alone cannot reach d; the remainder is then written in binary over
    the powers.

    Raises:
        ParameterError: If d cannot be covered by the parity positions
    """
    powers = [p for p in parity_positions if not p & (p - 1)]
    extras = [p for p in parity_positions if p & (p - 1)]

    chosen = []
    remainder = d
    if remainder > sum(powers) and extras:
        chosen.append(extras[0])
        remainder -= extras[0]

    for p in sorted(powers, reverse=True):
        if remainder >= p:
            chosen.append(p)
            remainder -= p

    if remainder != 0 or d < 0:
        raise ParameterError(f"deficiency {d} cannot be covered by parity positions {list(parity_positions)}")
    return sorted(chosen)


def vt_encode(message: BitsLike, params: CodeParams) -> np.ndarray:
    """
    Place the message on the non-parity positions and balance the weighted sum.

    Raises:
        ParameterError: If the message length is not l
    """
    message = as_bits(message)
    if message.size != params.l:
        raise ParameterError(f"message must have {params.l} bits, got {message.size}")

    word = np.zeros(params.m, dtype=np.uint8)
    word[params.message_index] = message

    d = deficiency(word, params.vt_modulus)
    for position in partition_deficiency(d, params.parity_positions):
        word[position - 1] = 1
    return word


def extract_message(word: BitsLike, params: CodeParams) -> np.ndarray:
    """Read the message back from the non-parity positions."""
    word = as_bits(word)
    if word.size != params.m:
        raise ParameterError(f"VT word must have {params.m} bits, got {word.size}")
    return word[params.message_index].copy()


def correct_substitution(bits: BitsLike, params: CodeParams) -> VtCorrection:
    """
    Correct at most one flipped bit in a length-m word.

    Raises:
        UncorrectableError: If the bit the deficiency points at does not
            hold the value a single flip would leave there
    """
    word = as_bits(bits)
    if word.size != params.m:
        raise ParameterError(f"substitution decoding needs {params.m} bits, got {word.size}")

    d = deficiency(word, params.vt_modulus)
    if d == 0:
        return VtCorrection(word, None, None)

    if d <= params.m:
        position, expected, repaired = d, 0, 1
    else:
        position, expected, repaired = params.vt_modulus - d, 1, 0

    if word[position - 1] != expected:
        raise UncorrectableError(
            f"uncorrectable substitution pattern: deficiency {d} points at position {position} "
            f"holding {int(word[position - 1])}"
        )
    word[position - 1] = repaired
    logger.debug(f"Substitution corrected at VT position {position}")
    return VtCorrection(word, position, repaired)


def correct_deletion(bits: BitsLike, params: CodeParams) -> VtCorrection:
    """
    Restore one deleted bit in a length m - 1 word.

    A deleted 0 leaves a deficiency equal to the ones to its right; a
    deleted 1 leaves one larger than the weight, and d - w - 1 counts the
    zeros to its left.

    Raises:
        UncorrectableError: If the required insertion point does not exist
    """
    received = as_bits(bits)
    if received.size != params.m - 1:
        raise ParameterError(f"deletion decoding needs {params.m - 1} bits, got {received.size}")

    d = deficiency(received, params.vt_modulus)
    w = int(received.sum())

    if d <= w:
        bit = 0
        if d == 0:
            index = received.size
        else:
            ones = np.flatnonzero(received == 1)
            index = int(ones[-d])
    else:
        bit = 1
        zeros_left = d - w - 1
        zeros = np.flatnonzero(received == 0)
        if zeros_left > zeros.size:
            raise UncorrectableError(
                f"uncorrectable deletion pattern: deficiency {d} with weight {w} needs "
                f"{zeros_left} zeros, word has {zeros.size}"
            )
        index = 0 if zeros_left == 0 else int(zeros[zeros_left - 1]) + 1

    word = np.insert(received, index, bit).astype(np.uint8)
    if weighted_sum(word, params.vt_modulus) != 0:
        raise UncorrectableError(f"uncorrectable deletion pattern: {bits_to_str(received)}")
    logger.debug(f"Deletion corrected: inserted {bit} at VT position {index + 1}")
    return VtCorrection(word, index + 1, bit)


def correct_insertion(bits: BitsLike, params: CodeParams) -> VtCorrection:
    """
    Remove one inserted bit from a length m + 1 word.

    With e the weighted sum of the received word, an inserted 0 has
    exactly e ones to its right; an inserted 1 at position q satisfies
    q + (ones right of q) = e.

    Raises:
        UncorrectableError: If no single deletion gives a codeword
    """
    received = as_bits(bits)
    if received.size != params.m + 1:
        raise ParameterError(f"insertion decoding needs {params.m + 1} bits, got {received.size}")

    e = weighted_sum(received, params.vt_modulus)
    ones_right = int(received.sum()) - np.cumsum(received, dtype=np.int64)
    positions = np.arange(1, received.size + 1)

    zero_hits = np.flatnonzero((received == 0) & (ones_right == e))
    if zero_hits.size:
        index = int(zero_hits[0])
    else:
        one_hits = np.flatnonzero((received == 1) & (positions + ones_right == e))
        if not one_hits.size:
            raise UncorrectableError(
                f"uncorrectable insertion pattern: no bit matches weighted sum {e}"
            )
        index = int(one_hits[0])

    bit = int(received[index])
    word = np.delete(received, index).astype(np.uint8)
    if weighted_sum(word, params.vt_modulus) != 0:
        raise UncorrectableError(f"uncorrectable insertion pattern: {bits_to_str(received)}")
    logger.debug(f"Insertion corrected: removed {bit} at received position {index + 1}")
    return VtCorrection(word, index + 1, bit)


def vt_decode_substitution(bits: BitsLike, params: CodeParams) -> np.ndarray:
    return correct_substitution(bits, params).word


def vt_decode_deletion(bits: BitsLike, params: CodeParams) -> np.ndarray:
    return correct_deletion(bits, params).word


def vt_decode_insertion(bits: BitsLike, params: CodeParams) -> np.ndarray:
    return correct_insertion(bits, params).word
