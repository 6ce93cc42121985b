"""
Tests for the base map and the DNA distance primitives.
"""

import pytest

from app.core.analysis import enumerate_codebook
from app.core.dnamap import (
    BASE_TO_PAIR,
    PAIR_TO_BASE,
    complement,
    first_bits,
    from_strand,
    gc_content,
    gc_weight,
    hamming,
    reverse,
    reverse_complement,
    to_strand,
    validate_strand,
)
from app.core.errors import AlphabetError, DistanceError
from app.core.params import derive_params
from app.models.bits import bits_to_str


class TestBaseMap:
    """Test to_strand, from_strand and first_bits."""

    @pytest.mark.parametrize('expanded,strand', [
        ('11110011000111000011', 'TGGGCCTTAA'),
        ('10000000001000011111', 'GCCCCAAAAA'),
        ('0' * 20, 'C' * 10),
    ])
    def test_examples(self, expanded, strand):
        assert to_strand(expanded) == strand
        assert bits_to_str(from_strand(strand)) == expanded

    def test_pair_table(self):
        assert PAIR_TO_BASE == {(0, 0): 'C', (0, 1): 'A', (1, 0): 'T', (1, 1): 'G'}
        for base, pair in BASE_TO_PAIR.items():
            assert PAIR_TO_BASE[pair] == base

    def test_first_bits_of_received_strand(self):
        assert bits_to_str(first_bits('TGGCCTTAA')[1:]) == '11001100'
        assert bits_to_str(first_bits('CCCC')) == '0000'
        assert bits_to_str(first_bits('TGGGCCTTAA')) == '1111001100'

    def test_first_bits_accepts_lowercase(self):
        assert bits_to_str(first_bits('gtac')) == '1100'

    def test_invalid_character_rejected(self):
        with pytest.raises(AlphabetError):
            from_strand('ACGU')
        with pytest.raises(AlphabetError):
            first_bits('AXC')

    def test_validate_strand_normalises(self):
        assert validate_strand(' acgt\n') == 'ACGT'


class TestDistances:
    """Test reverse, complement and hamming."""

    def test_reverse_and_reverse_complement(self):
        assert reverse('AGC') == 'CGA'
        assert reverse_complement('AGC') == 'GCT'
        assert complement('AGC') == 'TCG'

    @pytest.mark.parametrize('x,y,expected', [
        ('AGC', 'ATG', 2),
        ('TGGGCCTTAA', 'TGGGCCTTAA', 0),
        ('TGGGCCTTAA', 'GCCCCAAAAA', 7),
    ])
    def test_hamming(self, x, y, expected):
        assert hamming(x, y) == expected

    def test_hamming_length_mismatch(self):
        with pytest.raises(DistanceError):
            hamming('ACG', 'AC')


class TestGcContent:
    """Test gc_weight and gc_content, including the codebook balance property."""

    @pytest.mark.parametrize('strand,weight', [('TGGGCCTTAA', 5), ('A' * 10, 0), ('GCCCCAAAAA', 5)])
    def test_gc_weight(self, strand, weight):
        assert gc_weight(strand) == weight

    def test_gc_content(self):
        assert gc_content('TGGGCCTTAA') == 0.5
        assert gc_content('') == 0.0

    @pytest.mark.parametrize('n', [6, 8, 10, 12, 14])
    def test_even_lengths_are_balanced(self, n):
        for strand in enumerate_codebook(derive_params(n)):
            assert gc_weight(strand) == n // 2

    @pytest.mark.parametrize('n', [7, 9, 11, 13])
    def test_odd_lengths_are_within_one(self, n):
        for strand in enumerate_codebook(derive_params(n)):
            assert gc_weight(strand) in ((n - 1) // 2, (n + 1) // 2)

    @pytest.mark.parametrize('n', range(6, 15))
    def test_zoning(self, n):
        """Bases 2..(n-1)/2 are G/C, the upper half A/T, the first base G or T."""
        low = (n - 1) // 2
        high = (n + 2) // 2
        for strand in enumerate_codebook(derive_params(n)):
            assert strand[0] in 'GT'
            assert all(b in 'GC' for b in strand[1:low + 1])
            assert all(b in 'AT' for b in strand[high:])
