"""
Schemas for CLI input validation and report serialization.
Uses Marshmallow for robust validation and serialization.
"""

from marshmallow import Schema, fields, validate, validates, validates_schema, ValidationError, post_load

from app.core.channel import MIX_KEYS, parse_mix
from app.core.errors import ChannelError
from app.core.params import MIN_STRAND_LENGTH


class ErrorMixField(fields.Field):
    """Error mix given as `del:p,ins:p,sub:p,none:p` text or as a mapping."""

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            if isinstance(value, str):
                return parse_mix(value)
            if isinstance(value, dict):
                return parse_mix(','.join(f"{k}:{v}" for k, v in value.items()))
        except ChannelError as e:
            raise ValidationError(str(e)) from e
        raise ValidationError('error mix must be text or a mapping')

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return ','.join(f"{key}:{value.get(key, 0.0)}" for key in MIX_KEYS)


class CodeParamsSchema(Schema):
    """Schema for code parameter output."""

    n = fields.Int()
    m = fields.Int()
    vt_modulus = fields.Int()
    parity_positions = fields.List(fields.Int())
    l = fields.Int()
    message_positions = fields.List(fields.Int())

    class Meta:
        """Meta options."""
        ordered = True


class ChannelEventSchema(Schema):
    """Schema for a single channel event."""

    kind = fields.Str(required=True, validate=validate.OneOf(['delete', 'insert', 'substitute']))
    position = fields.Int(required=True, validate=validate.Range(min=1))
    base = fields.Str(required=False, allow_none=True, validate=validate.OneOf(['A', 'C', 'G', 'T']))

    @validates_schema
    def validate_base(self, data, **kwargs):
        """Insertions and substitutions carry a base, deletions do not."""
        if data['kind'] == 'delete' and data.get('base'):
            raise ValidationError('delete events carry no base', field_name='base')
        if data['kind'] != 'delete' and not data.get('base'):
            raise ValidationError(f"{data['kind']} events need a base", field_name='base')

    class Meta:
        """Meta options."""
        ordered = True


class DecodeReportSchema(Schema):
    """Schema for per-strand decode reports."""

    index = fields.Int(allow_none=True)
    corrected_error = fields.Str(validate=validate.OneOf(['none', 'deletion', 'insertion', 'substitution']))
    detail = fields.Dict(keys=fields.Str())
    redundancy_violations = fields.List(fields.Int())
    warnings = fields.List(fields.Str())
    failed = fields.Bool()

    class Meta:
        """Meta options."""
        ordered = True


class AnalysisReportSchema(Schema):
    """Schema for the codebook analysis record."""

    n = fields.Int()
    code_size = fields.Int()
    min_hamming = fields.Int()
    min_reverse = fields.Int()
    min_rc = fields.Int()
    rc_formula_value = fields.Int()
    rc_excess = fields.Int()
    gc_min = fields.Int()
    gc_max = fields.Int()
    gc_target = fields.Int()
    gc_content_min = fields.Float()
    gc_content_max = fields.Float()
    junction_hits = fields.Int(allow_none=True)
    constraints = fields.Dict(keys=fields.Str(), values=fields.Bool(), required=False)

    class Meta:
        """Meta options."""
        ordered = True


class ThresholdsSchema(Schema):
    """Schema for analysis constraint thresholds."""

    d_min = fields.Int(required=False, allow_none=True, validate=validate.Range(min=0))
    reverse_min = fields.Int(required=False, allow_none=True, validate=validate.Range(min=0))
    rc_min = fields.Int(required=False, allow_none=True, validate=validate.Range(min=0))
    gc_target = fields.Int(required=False, allow_none=True, validate=validate.Range(min=0))

    class Meta:
        """Meta options."""
        ordered = True


class CliConfigSchema(Schema):
    """Schema for validating a parsed command line."""

    subcommand = fields.Str(required=True)
    n = fields.Int(required=False, allow_none=True)
    l = fields.Int(required=False, allow_none=True, validate=validate.Range(min=1))
    input = fields.Str(required=False, load_default='-')
    output = fields.Str(required=False, load_default='-')
    log = fields.Str(required=False, allow_none=True)
    json = fields.Str(required=False, allow_none=True)
    seed = fields.Int(required=False, allow_none=True)
    mix = ErrorMixField(required=False, allow_none=True)
    events_per_strand = fields.Int(required=False, load_default=1, validate=validate.Range(min=1))
    allow_multiple = fields.Bool(required=False, load_default=False)
    force = fields.Bool(required=False, load_default=False)
    thresholds = fields.Nested(ThresholdsSchema, required=False, load_default=dict)

    @validates('n')
    def validate_n(self, value, **kwargs):
        """Validate the strand length supports a nonzero message."""
        if value is not None and value < MIN_STRAND_LENGTH:
            raise ValidationError(
                f'strand length too short for nonzero message length (minimum {MIN_STRAND_LENGTH})'
            )

    @validates_schema
    def validate_multi_event(self, data, **kwargs):
        """Multi-event corruption is opt-in."""
        if data.get('events_per_strand', 1) > 1 and not data.get('allow_multiple'):
            raise ValidationError(
                'events_per_strand above 1 requires allow_multiple',
                field_name='events_per_strand'
            )

    @post_load
    def drop_empty(self, data, **kwargs):
        """Remove unset optional values so config defaults apply."""
        return {key: value for key, value in data.items() if value is not None}

    class Meta:
        """Meta options."""
        ordered = True


# Create schema instances for reuse
code_params_schema = CodeParamsSchema()
channel_event_schema = ChannelEventSchema()
decode_report_schema = DecodeReportSchema()
analysis_report_schema = AnalysisReportSchema()
thresholds_schema = ThresholdsSchema()
cli_config_schema = CliConfigSchema()
