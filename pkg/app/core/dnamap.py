"""
Bit <-> base mapping and DNA primitives.

Base j of a strand encodes the pair (b_j, b_{j+n}) of a 2n-bit expanded
word: 00 -> C, 01 -> A, 10 -> T, 11 -> G. The first bit of the pair is
1 exactly for G and T.
"""

import logging

import numpy as np

from app.core.errors import AlphabetError, DistanceError
from app.models.bits import BitsLike, as_bits

logger = logging.getLogger('DnaMap')

ALPHABET = 'ACGT'

PAIR_TO_BASE = {
    (0, 0): 'C',
    (0, 1): 'A',
    (1, 0): 'T',
    (1, 1): 'G',
}
BASE_TO_PAIR = {base: pair for pair, base in PAIR_TO_BASE.items()}

COMPLEMENT = str.maketrans('ACGT', 'TGCA')


def validate_strand(s: str) -> str:
    """
    Normalise a strand to uppercase and check its alphabet.

    Raises:
        AlphabetError: If any character is outside {A, C, G, T}
    """
    strand = s.strip().upper()
    bad = sorted(set(strand) - set(ALPHABET))
    if bad:
        raise AlphabetError(f"invalid base(s) {''.join(bad)!r} in strand {s!r}")
    return strand


def to_strand(ew: BitsLike) -> str:
    """Map a 2n-bit expanded word to its n-base strand."""
    bits = as_bits(ew)
    if bits.size % 2:
        raise ValueError(f"expanded word must have even length, got {bits.size}")
    n = bits.size // 2
    return ''.join(PAIR_TO_BASE[(int(bits[j]), int(bits[j + n]))] for j in range(n))


def from_strand(s: str) -> np.ndarray:
    """Inverse of to_strand."""
    strand = validate_strand(s)
    pairs = [BASE_TO_PAIR[base] for base in strand]
    first = [p[0] for p in pairs]
    second = [p[1] for p in pairs]
    return np.array(first + second, dtype=np.uint8)


def first_bits(bases: str) -> np.ndarray:
    """First bit of each base's pair code: G, T -> 1; A, C -> 0."""
    strand = validate_strand(bases)
    return np.array([BASE_TO_PAIR[base][0] for base in strand], dtype=np.uint8)


def reverse(x: str) -> str:
    return x[::-1]


def complement(x: str) -> str:
    return x.translate(COMPLEMENT)


def reverse_complement(x: str) -> str:
    return complement(x)[::-1]


def hamming(x: str, y: str) -> int:
    """
    Count positions where two equal-length strands differ.

    Raises:
        DistanceError: On length mismatch
    """
    if len(x) != len(y):
        raise DistanceError(f"hamming distance needs equal lengths, got {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def gc_weight(x: str) -> int:
    return sum(base in 'GC' for base in x)


def gc_content(x: str) -> float:
    """GC weight divided by strand length (0.0 for an empty strand)."""
    return gc_weight(x) / len(x) if x else 0.0
