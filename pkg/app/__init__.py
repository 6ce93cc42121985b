"""
Application factory for the DNA strand codec.
"""

from dataclasses import dataclass
import logging
from logging.handlers import RotatingFileHandler
import os
import sys

from app.config import get_config

logger = logging.getLogger('dnacodec')


@dataclass
class Application:
    """Configured application: settings plus the command registry."""

    config: type
    registry: object


def create_app(config_name=None):
    """Application factory pattern."""
    # Load configuration
    config = get_config(config_name)

    # Setup logging
    setup_logging(config)

    # Register commands
    registry = register_commands()

    logger.debug(
        f"DNA codec started with {registry.get_command_count()} commands "
        f"({config.__name__})"
    )

    return Application(config=config, registry=registry)


def setup_logging(config):
    """Configure application logging. Diagnostics go to stderr, never stdout."""
    root = logging.getLogger()
    level = getattr(logging, config.LOG_LEVEL)
    formatter = logging.Formatter(config.LOG_FORMAT)

    # create_app may run several times in one process (tests); install handlers once
    if not any(getattr(h, 'dnacodec_handler', False) for h in root.handlers):
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        stream_handler.dnacodec_handler = True
        root.addHandler(stream_handler)

        if not config.DEBUG and not config.TESTING:
            log_dir = os.path.dirname(config.LOG_FILE)
            if log_dir and not os.path.exists(log_dir):
                os.makedirs(log_dir)

            file_handler = RotatingFileHandler(
                config.LOG_FILE,
                maxBytes=10240000,
                backupCount=10
            )
            file_handler.setFormatter(formatter)
            file_handler.setLevel(level)
            file_handler.dnacodec_handler = True
            root.addHandler(file_handler)

    root.setLevel(level)


def register_commands():
    """Register CLI commands."""
    from app.core.command_registry import command_registry

    return command_registry
