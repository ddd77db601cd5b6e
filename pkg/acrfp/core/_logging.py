import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

__all__ = ("configure_logging", "make_console", "make_error_console",)

_LOGGER_NAME = "acrfp"


def make_console() -> Console:
    return Console(highlight=False, force_terminal=True, markup=False, soft_wrap=True)


def make_error_console() -> Console:
    return Console(stderr=True, highlight=False, markup=False, soft_wrap=True)


def configure_logging(verbosity: int = 0, *, console: Optional[Console] = None) -> None:
    """
    Route the package loggers through a single rich handler.

    :param verbosity: ``-1`` errors only, ``0`` warnings, ``1`` or more debug output.
    :param console: Console to render into, stderr by default.
    """
    if verbosity < 0:
        level = logging.ERROR
    elif verbosity == 0:
        level = logging.WARNING
    else:
        level = logging.DEBUG

    logger = logging.getLogger(_LOGGER_NAME)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)

    handler = RichHandler(console=console or make_error_console(), show_path=False,
                          rich_tracebacks=False, markup=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
