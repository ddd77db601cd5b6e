from argparse import Namespace
from pathlib import Path

from rich.style import Style

from ..core import ConfigDumper, ExitCode, atomic_write_text
from ._command import Command

__all__ = ("ConfigCommand",)


class ConfigCommand(Command):
    """
    ``config init`` writes the full effective configuration as JSON.

    The output can be edited and passed back with ``--config``; it reproduces every default.
    """

    def _parse(self) -> Namespace:
        actions = self._arg_parser.add_subparsers(dest="action", metavar="{init}")
        actions.required = True
        init = actions.add_parser("init", help="Write the effective configuration")
        init.add_argument("--out", type=Path, default=None,
                          help="Output file (default: stdout)")
        return self._arg_parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        text = ConfigDumper().dumps(self._config)
        if args.out is None:
            self.console.out(text, end="")
        else:
            atomic_write_text(args.out, text)
            self.console.out(f"Wrote config: {args.out}", style=Style(color="green"))
        return ExitCode.OK
