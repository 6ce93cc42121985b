"""
Tests for bit helpers, report models and marshmallow schemas.
"""

import numpy as np
import pytest
from marshmallow import ValidationError

from app.core.codec import decode_strand
from app.models import (
    AnalysisReport,
    ChannelEvent,
    EventKind,
    as_bits,
    bits_to_str,
    int_to_bits,
)
from app.models.schemas import (
    channel_event_schema,
    cli_config_schema,
    code_params_schema,
    decode_report_schema,
    thresholds_schema,
)


class TestBits:
    """Test bit helpers."""

    def test_msb_first(self):
        assert bits_to_str(int_to_bits(11, 4)) == '1011'
        assert as_bits('1011').tolist() == [1, 0, 1, 1]

    def test_sources(self):
        expected = [1, 0, 1]

        assert as_bits('101').tolist() == expected
        assert as_bits(b'101').tolist() == expected
        assert as_bits([1, 0, 1]).tolist() == expected
        assert as_bits(np.array([1, 0, 1])).tolist() == expected

    def test_copy(self):
        source = np.array([1, 0], dtype=np.uint8)
        as_bits(source)[0] = 0
        assert source[0] == 1

    @pytest.mark.parametrize('value', ['102', [0, 2], np.array([257, 0, 1]), np.array([-1, 0])])
    def test_rejects_non_binary(self, value):
        with pytest.raises(ValueError):
            as_bits(value)


class TestReports:
    """Test report models."""

    def test_channel_event_text(self):
        assert str(ChannelEvent(EventKind.INSERT, 2, 'G')) == 'insert 2 G'
        assert str(ChannelEvent(EventKind.DELETE, 4)) == 'delete 4'

    def test_analysis_report_fractions(self):
        report = AnalysisReport(
            n=10, code_size=16, min_hamming=2, min_reverse=3, min_rc=8,
            rc_formula_value=6, gc_min=5, gc_max=5, gc_target=5,
        )

        assert report.rc_excess == 2
        assert report.gc_content_max == 0.5
        assert report.to_dict()['junction_hits'] is None


class TestSchemas:
    """Test marshmallow schemas."""

    def test_code_params_dump(self, params10):
        data = code_params_schema.dump(params10)

        assert list(data) == ['n', 'm', 'vt_modulus', 'parity_positions', 'l', 'message_positions']
        assert data['parity_positions'] == [1, 2, 4, 8, 9]

    def test_decode_report_dump(self, params10):
        _, report = decode_strand('TGGCCTTAA', params10, index=0)

        data = decode_report_schema.dump(report.to_dict())

        assert data['corrected_error'] == 'deletion'
        assert data['detail'] == {'vt_position': 1, 'bit': 1}
        assert data['failed'] is False

    def test_channel_event_load(self):
        assert channel_event_schema.load({'kind': 'insert', 'position': 2, 'base': 'G'})['base'] == 'G'

    @pytest.mark.parametrize('data', [
        {'kind': 'delete', 'position': 4, 'base': 'A'},
        {'kind': 'substitute', 'position': 4},
        {'kind': 'tandem', 'position': 4},
        {'kind': 'delete', 'position': 0},
    ])
    def test_channel_event_rejects(self, data):
        with pytest.raises(ValidationError):
            channel_event_schema.load(data)

    def test_thresholds_reject_negative(self):
        with pytest.raises(ValidationError):
            thresholds_schema.load({'d_min': -1})

    def test_cli_defaults(self):
        options = cli_config_schema.load({'subcommand': 'decode'})

        assert options['input'] == '-'
        assert options['output'] == '-'
        assert options['events_per_strand'] == 1
        assert options['force'] is False
        assert options['thresholds'] == {}
        assert 'n' not in options

    def test_cli_mix_parsed(self):
        options = cli_config_schema.load({'subcommand': 'simulate', 'mix': 'del:0.5,sub:0.5'})
        assert options['mix'] == {'delete': 0.5, 'insert': 0.0, 'substitute': 0.5, 'none': 0.0}

    @pytest.mark.parametrize('data', [
        {'subcommand': 'params', 'n': 5},
        {'subcommand': 'simulate', 'mix': 'del:0.2'},
        {'subcommand': 'simulate', 'events_per_strand': 3},
    ])
    def test_cli_rejects(self, data):
        with pytest.raises(ValidationError):
            cli_config_schema.load(data)
