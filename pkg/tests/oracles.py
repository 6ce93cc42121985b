"""
Brute-force reference decoders used to cross-check the VT decoding rules.
"""

from itertools import combinations

import numpy as np

from app.core.vt import weighted_sum
from app.models.bits import bits_to_str, int_to_bits


def all_codewords(params):
    """Every length-m word with zero weighted sum, by exhaustive search."""
    words = []
    for value in range(1 << params.m):
        word = int_to_bits(value, params.m)
        if weighted_sum(word, params.vt_modulus) == 0:
            words.append(bits_to_str(word))
    return words


def deletion_preimages(received, params):
    """Codewords that lose one bit to become the received word."""
    found = set()
    for index in range(len(received) + 1):
        for bit in '01':
            candidate = received[:index] + bit + received[index:]
            if weighted_sum(candidate, params.vt_modulus) == 0:
                found.add(candidate)
    return found


def insertion_preimages(received, params):
    """Codewords that gain one bit to become the received word."""
    found = set()
    for index in range(len(received)):
        candidate = received[:index] + received[index + 1:]
        if weighted_sum(candidate, params.vt_modulus) == 0:
            found.add(candidate)
    return found


def substitution_preimages(received, params):
    """Codewords within one flip of the received word."""
    found = set()
    if weighted_sum(received, params.vt_modulus) == 0:
        found.add(received)
    for index in range(len(received)):
        flipped = received[:index] + ('1' if received[index] == '0' else '0') + received[index + 1:]
        if weighted_sum(flipped, params.vt_modulus) == 0:
            found.add(flipped)
    return found


def covering_subset(total, positions):
    """Some subset of positions summing to total, or None."""
    for size in range(len(positions) + 1):
        for subset in combinations(positions, size):
            if sum(subset) == total:
                return subset
    return None


def as_str(bits):
    return bits_to_str(np.asarray(bits))
