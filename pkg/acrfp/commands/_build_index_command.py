import time
from argparse import Namespace
from dataclasses import replace
from pathlib import Path

from rich.style import Style

from ..core import ExitCode
from ..index import IndexType, build_index, save_index
from ..refdb import load_db
from ._command import Command

__all__ = ("BuildIndexCommand",)


class BuildIndexCommand(Command):
    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("--db", type=Path, required=True, help="Reference DB file")
        parser.add_argument("--type", choices=[t.value for t in IndexType], default=None,
                            help="Index type (default: Index.type)")
        parser.add_argument("--nlist", type=int, default=None,
                            help="IVF cluster count, 0 derives it from the DB size")
        parser.add_argument("--nprobe", type=int, default=None,
                            help="Default lists probed per query")
        parser.add_argument("--seed", type=int, default=None, help="k-means seed")
        parser.add_argument("--out", type=Path, required=True, help="Output index file")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        overrides = {name: getattr(args, name) for name in ("nlist", "nprobe", "seed")
                     if getattr(args, name) is not None}
        if args.type is not None:
            overrides["type"] = IndexType(args.type)
        index_settings = replace(self.settings.index, **overrides)

        db = load_db(args.db)
        started = time.perf_counter()
        index = build_index(db, index_settings)
        elapsed = time.perf_counter() - started
        save_index(args.out, index)

        self.console.out(f"Built {index!r} in {elapsed:.2f}s: {args.out}",
                         style=Style(color="green"))
        return ExitCode.OK
