import asyncio
import sys

from ._config import Config, Section
from ._main import main
from ._settings import Settings, settings_from_config
from ._version import version

__version__ = version
__all__ = ("Config", "Section", "Settings", "settings_from_config", "main", "run",)


def run() -> None:
    sys.exit(asyncio.run(main()))
