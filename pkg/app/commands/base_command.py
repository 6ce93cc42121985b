"""
Base command class for all CLI subcommands.
"""

from abc import ABC, abstractmethod
from argparse import ArgumentParser
from dataclasses import dataclass, field
from typing import Any, Dict, TextIO
import logging
import sys

from marshmallow import ValidationError

from app.config import Config
from app.core.errors import (
    AlphabetError,
    ArchiveFormatError,
    ChannelError,
    CodebookCapError,
    ParameterError,
    UncorrectableError,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass
class CommandContext:
    """Configuration and standard streams a command runs against."""

    config: type = Config
    stdin: TextIO = field(default_factory=lambda: sys.stdin)
    stdout: TextIO = field(default_factory=lambda: sys.stdout)
    stderr: TextIO = field(default_factory=lambda: sys.stderr)

    def read_bytes(self, path: str) -> bytes:
        if path == '-':
            return self.stdin.buffer.read()
        with open(path, 'rb') as f:
            return f.read()

    def read_text(self, path: str) -> str:
        if path == '-':
            return self.stdin.read()
        with open(path, 'r', encoding='ascii') as f:
            return f.read()

    def write_bytes(self, path: str, data: bytes) -> None:
        if path == '-':
            self.stdout.flush()
            self.stdout.buffer.write(data)
            self.stdout.buffer.flush()
            return
        with open(path, 'wb') as f:
            f.write(data)

    def write_text(self, path: str, text: str) -> None:
        if path == '-':
            self.stdout.write(text)
            return
        with open(path, 'w', encoding='ascii', newline='\n') as f:
            f.write(text)

    def emit(self, line: str = '') -> None:
        """Report line on stdout."""
        self.stdout.write(line + '\n')

    def diagnose(self, line: str) -> None:
        """Diagnostic line on stderr."""
        self.stderr.write(line + '\n')


class BaseCommand(ABC):
    """
    Abstract base class for all subcommands.

    All commands must inherit from this class and implement the execute method.
    """

    def __init__(self, name: str, description: str = ""):
        """
        Initialize base command.

        Args:
            name: Subcommand name
            description: One-line help text
        """
        self.name = name
        self.description = description
        self.logger = logging.getLogger(f"command.{name}")

    def add_arguments(self, parser: ArgumentParser) -> None:
        """Declare subcommand-specific arguments."""

    @abstractmethod
    def execute(self, options: Dict[str, Any], context: CommandContext) -> int:
        """
        Execute the command logic.

        Args:
            options: Options validated by CliConfigSchema
            context: Configuration and streams

        Returns:
            Process exit code
        """
        pass

    def run(self, options: Dict[str, Any], context: CommandContext) -> int:
        """
        Wrapper method that handles logging and maps errors to exit codes.

        Args:
            options: Validated options
            context: Configuration and streams

        Returns:
            Exit code: 0 success, 1 decode/verification failure,
            2 usage/parameter error, 3 I/O error
        """
        self.logger.debug(f"Starting command: {self.name}")

        try:
            code = self.execute(options, context)
            self.logger.debug(f"Command {self.name} finished with exit code {code}")
            return code

        except UncorrectableError as e:
            context.diagnose(f"error: {e}")
            if e.report is not None:
                context.diagnose(e.report.summary())
            return EXIT_FAILURE
        except (ParameterError, ChannelError, CodebookCapError, ValidationError) as e:
            context.diagnose(f"error: {e}")
            return EXIT_USAGE
        except (OSError, ArchiveFormatError, AlphabetError) as e:
            context.diagnose(f"error: {e}")
            return EXIT_IO
        except Exception as e:
            self.logger.error(f"Command {self.name} failed with error: {str(e)}", exc_info=True)
            context.diagnose(f"error: {e}")
            return EXIT_FAILURE

    def strand_length(self, options: Dict[str, Any], context: CommandContext) -> int:
        """Strand length from --n, or the configured default."""
        return options.get('n', context.config.DEFAULT_STRAND_LENGTH)
