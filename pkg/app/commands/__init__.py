"""
CLI subcommand implementations.
"""

from argparse import ArgumentParser
from typing import Any, Dict
import json

from app.commands.base_command import (
    BaseCommand,
    CommandContext,
    EXIT_FAILURE,
    EXIT_OK,
)
from app.core.analysis import analyze, check_constraints, codebook_table
from app.core.channel import corrupt_archive, format_event_log, parse_mix
from app.core.errors import ParameterError, UncorrectableError
from app.core.framing import decode_stream, encode_stream
from app.core.params import derive_params, smallest_strand_length
from app.models.archive import StrandArchive
from app.models.schemas import analysis_report_schema, code_params_schema, decode_report_schema


def _format_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ','.join(str(v) for v in value)
    return str(value)


def _add_channel_arguments(parser: ArgumentParser) -> None:
    parser.add_argument('--seed', type=int, help='channel seed')
    parser.add_argument('--mix', help='error mix, e.g. del:0.3,ins:0.3,sub:0.3,none:0.1')
    parser.add_argument('--events-per-strand', dest='events_per_strand', type=int,
                        help='events drawn per strand (above 1 needs --allow-multiple)')
    parser.add_argument('--allow-multiple', dest='allow_multiple', action='store_true', default=None,
                        help='allow more than one event per strand')


class ParamsCommand(BaseCommand):
    """Print every code constant for a strand length."""

    def __init__(self):
        super().__init__("params", "Print code parameters for a strand length")

    def add_arguments(self, parser: ArgumentParser) -> None:
        group = parser.add_mutually_exclusive_group()
        group.add_argument('--n', type=int, help='strand length in bases')
        group.add_argument('--l', type=int, help='smallest strand length carrying l message bits')

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        if 'l' in options:
            n = smallest_strand_length(options['l'])
        else:
            n = self.strand_length(options, context)

        data = code_params_schema.dump(derive_params(n))
        for key, value in data.items():
            context.emit(f"{key}={_format_value(value)}")
        return EXIT_OK


class EncodeCommand(BaseCommand):
    """Encode a file into a strand archive."""

    def __init__(self):
        super().__init__("encode", "Encode a payload file into a strand archive")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length in bases')
        parser.add_argument('--in', dest='input', help="payload file ('-' for stdin)")
        parser.add_argument('--out', dest='output', help="archive file ('-' for stdout)")

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        params = derive_params(self.strand_length(options, context))
        payload = context.read_bytes(options['input'])

        archive = encode_stream(payload, params)
        context.write_text(options['output'], archive.to_text())

        self.logger.info(f"Wrote {len(archive)} strands to {options['output']}")
        return EXIT_OK


class ArchiveCommand(BaseCommand):
    """Shared handling for commands that read an archive."""

    def load_archive(self, options: Dict[str, Any], context: CommandContext) -> StrandArchive:
        """
        Read the input archive and check --n against its header.

        Raises:
            ParameterError: If --n disagrees with the archive header
        """
        archive = StrandArchive.from_text(context.read_text(options['input']))
        if 'n' in options and options['n'] != archive.n:
            raise ParameterError(f"--n {options['n']} does not match archive n={archive.n}")
        return archive


class DecodeCommand(ArchiveCommand):
    """Decode a strand archive back into its payload."""

    def __init__(self):
        super().__init__("decode", "Decode a strand archive into the payload file")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length (defaults to the archive header)')
        parser.add_argument('--in', dest='input', help="archive file ('-' for stdin)")
        parser.add_argument('--out', dest='output', help="payload file ('-' for stdout)")
        parser.add_argument('--force', action='store_true', default=None,
                            help='write partial output even if strands are uncorrectable')
        parser.add_argument('--json', help='also write the per-strand reports as JSON')

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        archive = self.load_archive(options, context)
        params = derive_params(archive.n)

        payload, reports = decode_stream(archive, params, force=options['force'])
        for report in reports:
            context.diagnose(report.summary())

        context.write_bytes(options['output'], payload)
        if 'json' in options:
            records = decode_report_schema.dump([report.to_dict() for report in reports], many=True)
            context.write_text(options['json'], json.dumps(records, indent=2) + '\n')
        return EXIT_FAILURE if any(report.failed for report in reports) else EXIT_OK


class AnalyzeCommand(BaseCommand):
    """Brute-force analysis of the whole codebook."""

    def __init__(self):
        super().__init__("analyze", "Measure codebook distances and GC content")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length in bases')
        parser.add_argument('--d-min', dest='d_min', type=int, help='minimum Hamming distance')
        parser.add_argument('--reverse-min', dest='reverse_min', type=int, help='minimum reverse distance')
        parser.add_argument('--rc-min', dest='rc_min', type=int, help='minimum reverse-complement distance')
        parser.add_argument('--gc-target', dest='gc_target', type=int, help='fixed GC weight')
        parser.add_argument('--json', help='also write the report as a JSON record')

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        params = derive_params(self.strand_length(options, context))
        config = context.config

        report = analyze(
            params,
            cap=config.CODEBOOK_CAP,
            block_size=config.ANALYSIS_BLOCK_SIZE,
            workers=config.ANALYSIS_WORKERS,
        )
        results = check_constraints(report, options.get('thresholds'))

        for key, value in report.to_dict().items():
            context.emit(f"{key}={_format_value(value)}")
        for result in results:
            context.emit(str(result))

        if 'json' in options:
            record = report.to_dict()
            record['constraints'] = {result.name: result.passed for result in results}
            context.write_text(options['json'], json.dumps(analysis_report_schema.dump(record), indent=2) + '\n')

        return EXIT_OK if all(result.passed for result in results) else EXIT_FAILURE


class SimulateCommand(ArchiveCommand):
    """Run an archive through the error channel."""

    def __init__(self):
        super().__init__("simulate", "Corrupt an archive with seeded channel events")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length (defaults to the archive header)')
        parser.add_argument('--in', dest='input', help="archive file ('-' for stdin)")
        parser.add_argument('--out', dest='output', help="corrupted archive file ('-' for stdout)")
        parser.add_argument('--log', help='event log file')
        _add_channel_arguments(parser)

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        archive = self.load_archive(options, context)
        corrupted, events = corrupt_archive(
            archive,
            options.get('mix') or parse_mix(context.config.DEFAULT_ERROR_MIX),
            options.get('seed', context.config.DEFAULT_SEED),
            events_per_strand=options['events_per_strand'],
            allow_multiple=options['allow_multiple'],
        )

        context.write_text(options['output'], corrupted.to_text())
        if 'log' in options:
            context.write_text(options['log'], format_event_log(events, len(corrupted)))
        return EXIT_OK


class RoundtripCommand(BaseCommand):
    """Encode, corrupt, decode and compare in one go."""

    def __init__(self):
        super().__init__("roundtrip", "Encode, corrupt and decode a file, then compare")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length in bases')
        parser.add_argument('--in', dest='input', help="payload file ('-' for stdin)")
        _add_channel_arguments(parser)

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        params = derive_params(self.strand_length(options, context))
        payload = context.read_bytes(options['input'])

        archive = encode_stream(payload, params)
        corrupted, events = corrupt_archive(
            archive,
            options.get('mix') or parse_mix(context.config.DEFAULT_ERROR_MIX),
            options.get('seed', context.config.DEFAULT_SEED),
            events_per_strand=options['events_per_strand'],
            allow_multiple=options['allow_multiple'],
        )

        try:
            decoded, _ = decode_stream(corrupted, params)
        except UncorrectableError as e:
            context.diagnose(f"error: {e}")
            decoded = None

        passed = decoded == payload
        context.emit(
            f"{'PASS' if passed else 'FAIL'} n={params.n} strands={len(archive)} "
            f"events={len(events)} bytes={len(payload)}"
        )
        return EXIT_OK if passed else EXIT_FAILURE


class CodebookCommand(BaseCommand):
    """List every message with its strand."""

    def __init__(self):
        super().__init__("codebook", "List every message and its codeword strand")

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument('--n', type=int, help='strand length in bases')

    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        params = derive_params(self.strand_length(options, context))
        for message, strand in codebook_table(params, cap=context.config.CODEBOOK_CAP):
            context.emit(f"{message} {strand}")
        return EXIT_OK


DEFAULT_COMMANDS = (
    ParamsCommand,
    EncodeCommand,
    DecodeCommand,
    AnalyzeCommand,
    SimulateCommand,
    RoundtripCommand,
    CodebookCommand,
)
