from abc import ABC, abstractmethod
from typing import Any, Callable, Optional

from rich.console import Console

from .._settings import Settings, settings_from_config
from ..core import ConfigType, ExitCode, make_console
from ._cmd_arg_parser import CommandArgumentParser

__all__ = ("Command", "ConsoleFactory",)

ConsoleFactory = Callable[[], Console]


class Command(ABC):
    """
    Serves as an abstract base class for the `acrfp` subcommands.

    A command gets the loaded config class and a parser holding its own arguments, and
    returns the process exit code. Library errors are left to the caller, which maps them
    to exit codes.
    """

    def __init__(self, config: ConfigType, arg_parser: CommandArgumentParser, *,
                 settings: Optional[Settings] = None,
                 console_factory: ConsoleFactory = make_console, **kwargs: Any) -> None:
        """
        :param config: The loaded configuration class.
        :param arg_parser: The parser for the subcommand's arguments.
        :param settings: Settings converted from `config`, with command-line overrides.
        :param console_factory: Factory for the console results are printed to.
        """
        self._config = config
        self._arg_parser = arg_parser
        self._settings = settings
        self._console = console_factory()

    @property
    def settings(self) -> Settings:
        if self._settings is None:
            self._settings = settings_from_config(self._config)
        return self._settings

    @property
    def console(self) -> Console:
        return self._console

    @abstractmethod
    async def run(self) -> ExitCode:
        """
        Parse the subcommand arguments and execute it.
        """
        pass
