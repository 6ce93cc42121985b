"""
Command-line front end.

Parses argv with argparse, validates the options through
CliConfigSchema and dispatches to the registered command.
"""

from argparse import ArgumentParser
from typing import Any, Dict, List, Optional
import logging

from marshmallow import ValidationError

from app import create_app
from app.commands.base_command import CommandContext, EXIT_USAGE
from app.models.schemas import cli_config_schema

THRESHOLD_KEYS = ('d_min', 'reverse_min', 'rc_min', 'gc_target')
OPTION_KEYS = (
    'n', 'l', 'input', 'output', 'log', 'json', 'seed', 'mix',
    'events_per_strand', 'allow_multiple', 'force',
)

logger = logging.getLogger('cli')


class UsageError(Exception):
    """Raised instead of argparse's SystemExit so run() can return exit code 2."""


class _Parser(ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser(registry) -> ArgumentParser:
    """Build the top-level parser with one subparser per registered command."""
    parser = _Parser(prog='dnacodec', description='Kernel/VT DNA strand codec')
    subparsers = parser.add_subparsers(dest='subcommand', parser_class=_Parser)
    subparsers.required = True

    for name, description in registry.list_commands().items():
        subparser = subparsers.add_parser(name, help=description, description=description)
        registry.get_command(name).add_arguments(subparser)
    return parser


def namespace_to_config(namespace) -> Dict[str, Any]:
    """Collect set options into the shape CliConfigSchema expects."""
    data = {'subcommand': namespace.subcommand}
    for key in OPTION_KEYS:
        value = getattr(namespace, key, None)
        if value is not None:
            data[key] = value

    thresholds = {
        key: getattr(namespace, key) for key in THRESHOLD_KEYS
        if getattr(namespace, key, None) is not None
    }
    if thresholds:
        data['thresholds'] = thresholds
    return data


def run(argv: Optional[List[str]] = None, context: Optional[CommandContext] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name
        context: Streams and configuration (defaults to the process streams)

    Returns:
        Exit code: 0 success, 1 decode/verification failure,
        2 usage/parameter error, 3 I/O error
    """
    try:
        application = create_app()
    except ValueError as e:
        (context or CommandContext()).diagnose(f"error: {e}")
        return EXIT_USAGE
    context = context or CommandContext(config=application.config)
    parser = build_parser(application.registry)

    try:
        namespace = parser.parse_args(argv)
    except UsageError as e:
        context.diagnose(parser.format_usage().rstrip())
        context.diagnose(f"error: {e}")
        return EXIT_USAGE

    try:
        options = cli_config_schema.load(namespace_to_config(namespace))
    except ValidationError as e:
        context.diagnose(f"error: invalid options {e.messages}")
        return EXIT_USAGE

    command = application.registry.get_command(options['subcommand'])
    return command.run(options, context)
