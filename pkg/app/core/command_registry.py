"""
Command registry for managing available CLI subcommands.
"""

from typing import Dict, Optional
from app.commands.base_command import BaseCommand
import logging


class CommandRegistry:
    """
    Singleton registry for managing command instances.

    Allows registration and retrieval of subcommands by name.
    """

    _instance = None
    _commands: Dict[str, BaseCommand] = {}

    def __new__(cls):
        """Implement singleton pattern."""
        if cls._instance is None:
            cls._instance = super(CommandRegistry, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Initialize registry if not already initialized."""
        if not self._initialized:
            self.logger = logging.getLogger('CommandRegistry')
            self._initialized = True
            self._register_default_commands()

    def _register_default_commands(self):
        """Register default commands on initialization."""
        from app.commands import DEFAULT_COMMANDS

        for command_class in DEFAULT_COMMANDS:
            self.register_command(command_class())

        self.logger.debug(f"Registered {len(self._commands)} default commands")

    def register_command(self, command: BaseCommand) -> None:
        """
        Register a command in the registry.

        Args:
            command: Command instance to register

        Raises:
            ValueError: If command is not a BaseCommand
        """
        if not isinstance(command, BaseCommand):
            raise ValueError(f"Command must be an instance of BaseCommand, got {type(command)}")

        if command.name in self._commands:
            self.logger.warning(f"Command '{command.name}' already registered, overwriting")

        self._commands[command.name] = command

    def get_command(self, name: str) -> Optional[BaseCommand]:
        """
        Get a command by name.

        Args:
            name: Name of the command to retrieve

        Returns:
            Command instance or None if not found
        """
        command = self._commands.get(name)
        if command is None:
            self.logger.warning(f"Command '{name}' not found in registry")
        return command

    def list_commands(self) -> Dict[str, str]:
        """
        List all registered commands.

        Returns:
            Dictionary mapping command names to descriptions
        """
        return {
            name: command.description
            for name, command in self._commands.items()
        }

    def command_exists(self, name: str) -> bool:
        return name in self._commands

    def get_command_count(self) -> int:
        """Get total number of registered commands."""
        return len(self._commands)


# Create global registry instance
command_registry = CommandRegistry()
