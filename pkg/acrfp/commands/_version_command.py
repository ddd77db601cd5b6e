from rich.style import Style

from .._version import version
from ..core import ExitCode
from ._command import Command

__all__ = ("VersionCommand",)


class VersionCommand(Command):
    async def run(self) -> ExitCode:
        self._arg_parser.parse_args()
        self.console.out(f"acrfp {version}", style=Style(color="blue"))
        return ExitCode.OK
