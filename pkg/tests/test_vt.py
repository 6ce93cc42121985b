"""
Tests for the VT encoder and the three single-error decoders.
"""

import pytest

from app.core.errors import ParameterError, UncorrectableError
from app.core.params import derive_params
from app.core.vt import (
    correct_deletion,
    correct_insertion,
    correct_substitution,
    deficiency,
    extract_message,
    is_codeword,
    partition_deficiency,
    vt_decode_deletion,
    vt_decode_insertion,
    vt_decode_substitution,
    vt_encode,
    weighted_sum,
)
from app.models.bits import bits_to_str, int_to_bits
from tests.oracles import (
    all_codewords,
    as_str,
    covering_subset,
    deletion_preimages,
    insertion_preimages,
    substitution_preimages,
)


def _codewords(n):
    params = derive_params(n)
    return params, [vt_encode(int_to_bits(k, params.l), params) for k in range(params.code_size)]


class TestChecksum:
    """Test weighted_sum and deficiency."""

    @pytest.mark.parametrize('bits,expected', [
        ('001001100', 16),
        ('111001100', 0),
        ('000000000', 0),
    ])
    def test_weighted_sum(self, bits, expected):
        assert weighted_sum(bits, 19) == expected

    def test_deficiency_reaches_target(self):
        assert deficiency('001001100', 19) == 3
        assert deficiency('11001100', 19) == 5
        assert deficiency('000000000', 19) == 0


class TestPartitionDeficiency:
    """Test partition_deficiency."""

    @pytest.mark.parametrize('d,expected', [(3, [1, 2]), (0, []), (17, [8, 9]), (18, [1, 8, 9])])
    def test_examples(self, d, expected):
        assert partition_deficiency(d, (1, 2, 4, 8, 9)) == expected

    @pytest.mark.parametrize('n', range(6, 33))
    def test_every_deficiency_splits_exactly(self, n):
        params = derive_params(n)
        for d in range(params.vt_modulus):
            subset = partition_deficiency(d, params.parity_positions)

            assert sum(subset) == d
            assert len(set(subset)) == len(subset)
            assert set(subset) <= set(params.parity_positions)

    def test_agrees_with_subset_search_on_coverage(self):
        params = derive_params(10)
        for d in range(params.vt_modulus):
            assert covering_subset(d, params.parity_positions) is not None

    def test_out_of_range_rejected(self):
        with pytest.raises(ParameterError):
            partition_deficiency(25, (1, 2, 4, 8, 9))


class TestVtEncode:
    """Test vt_encode and extract_message."""

    @pytest.mark.parametrize('message,word', [
        ('1011', '111001100'),
        ('0000', '000000000'),
        ('1111', '001011111'),
    ])
    def test_examples(self, params10, message, word):
        assert bits_to_str(vt_encode(message, params10)) == word
        assert bits_to_str(extract_message(word, params10)) == message

    def test_wrong_message_length_rejected(self, params10):
        with pytest.raises(ParameterError):
            vt_encode('101', params10)

    @pytest.mark.parametrize('n', range(6, 17))
    def test_every_message_is_a_codeword(self, n):
        params, words = _codewords(n)
        for k, word in enumerate(words):
            assert is_codeword(word, params)
            assert bits_to_str(extract_message(word, params)) == bits_to_str(int_to_bits(k, params.l))

    @pytest.mark.parametrize('n', range(6, 11))
    def test_codebook_is_subset_of_vt_code(self, n):
        params, words = _codewords(n)
        assert {as_str(w) for w in words} <= set(all_codewords(params))


class TestSubstitutionDecoder:
    """Test vt_decode_substitution."""

    @pytest.mark.parametrize('received', ['111001100', '110001100', '111101100'])
    def test_examples(self, params10, received):
        assert bits_to_str(vt_decode_substitution(received, params10)) == '111001100'

    def test_reports_position_and_bit(self, params10):
        correction = correct_substitution('110001100', params10)

        assert correction.position == 3
        assert correction.bit == 1

    def test_clean_word_untouched(self, params10):
        correction = correct_substitution('111001100', params10)
        assert correction.position is None

    def test_inconsistent_pattern_rejected(self, params10):
        with pytest.raises(UncorrectableError, match='uncorrectable substitution pattern'):
            vt_decode_substitution('110000000', params10)

    def test_wrong_length_rejected(self, params10):
        with pytest.raises(ParameterError):
            vt_decode_substitution('11001100', params10)

    @pytest.mark.parametrize('n', range(6, 13))
    def test_every_single_flip(self, n):
        params, words = _codewords(n)
        for word in words:
            for i in range(params.m):
                received = word.copy()
                received[i] ^= 1
                assert as_str(vt_decode_substitution(received, params)) == as_str(word)


class TestDeletionDecoder:
    """Test vt_decode_deletion."""

    @pytest.mark.parametrize('received,expected', [
        ('11001100', '111001100'),
        ('00000000', '000000000'),
        ('10100110', '101000110'),
    ])
    def test_examples(self, params10, received, expected):
        assert bits_to_str(vt_decode_deletion(received, params10)) == expected

    def test_worked_deletion_inserts_one(self, params10):
        correction = correct_deletion('11001100', params10)

        assert correction.bit == 1
        assert bits_to_str(correction.word) == '111001100'

    def test_missing_insertion_point_rejected(self, params10):
        with pytest.raises(UncorrectableError, match='uncorrectable deletion pattern'):
            vt_decode_deletion('10000000', params10)

    @pytest.mark.parametrize('n', range(6, 13))
    def test_every_single_deletion(self, n):
        params, words = _codewords(n)
        for word in words:
            for i in range(params.m):
                received = [b for j, b in enumerate(word) if j != i]
                assert as_str(vt_decode_deletion(received, params)) == as_str(word)

    @pytest.mark.parametrize('n', range(6, 13))
    def test_deficiency_below_weight_iff_zero_deleted(self, n):
        params = derive_params(n)
        for word in all_codewords(params):
            for i in range(params.m):
                received = word[:i] + word[i + 1:]
                d = deficiency(received, params.vt_modulus)

                assert (d <= received.count('1')) == (word[i] == '0')


class TestInsertionDecoder:
    """Test vt_decode_insertion."""

    @pytest.mark.parametrize('received', ['1110011000', '0111001100', '1111001100'])
    def test_examples(self, params10, received):
        assert bits_to_str(vt_decode_insertion(received, params10)) == '111001100'

    def test_no_matching_bit_rejected(self, params10):
        with pytest.raises(UncorrectableError, match='uncorrectable insertion pattern'):
            vt_decode_insertion('1100000000', params10)

    @pytest.mark.parametrize('n', range(6, 13))
    def test_every_single_insertion(self, n):
        params, words = _codewords(n)
        for word in words:
            text = as_str(word)
            for i in range(params.m + 1):
                for bit in '01':
                    received = text[:i] + bit + text[i:]
                    assert as_str(vt_decode_insertion(received, params)) == text


class TestOracleEquivalence:
    """Specialized rules agree with brute-force preimage search on the whole VT code."""

    @pytest.mark.parametrize('n', range(6, 11))
    def test_deletion_rule_matches_oracle(self, n):
        params = derive_params(n)
        for word in all_codewords(params):
            for i in range(params.m):
                received = word[:i] + word[i + 1:]
                preimages = deletion_preimages(received, params)

                assert preimages == {word}
                assert as_str(vt_decode_deletion(received, params)) == word

    @pytest.mark.parametrize('n', range(6, 11))
    def test_insertion_rule_matches_oracle(self, n):
        params = derive_params(n)
        for word in all_codewords(params):
            for i in range(params.m + 1):
                for bit in '01':
                    received = word[:i] + bit + word[i:]
                    preimages = insertion_preimages(received, params)

                    assert preimages == {word}
                    assert as_str(vt_decode_insertion(received, params)) == word

    @pytest.mark.parametrize('n', range(6, 11))
    def test_substitution_rule_matches_oracle(self, n):
        params = derive_params(n)
        for word in all_codewords(params):
            for i in range(params.m):
                received = word[:i] + ('1' if word[i] == '0' else '0') + word[i + 1:]
                preimages = substitution_preimages(received, params)

                assert preimages == {word}
                assert as_str(vt_decode_substitution(received, params)) == word
