from argparse import Namespace
from pathlib import Path
from typing import Sequence

from rich.style import Style
from rich.table import Table

from ..core import EmptyDatabaseError, ExitCode
from ..fingerprint import FingerprintKind
from ..refdb import BuildFailure, build_db, load_manifest, save_db
from ._command import Command
from ._helpers import KIND_CHOICES, make_fingerprinter

__all__ = ("BuildDbCommand",)


class BuildDbCommand(Command):
    """
    Fingerprints a corpus into an ``ACDB`` reference DB.

    Files that fail to decode or are too short are left out and listed after the build;
    the build only fails when no content is left.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("--corpus", type=Path, required=True,
                            help="Corpus manifest (JSON list of {id, path})")
        parser.add_argument("--kind", choices=KIND_CHOICES, default="proposed",
                            help="Fingerprint kind (default: proposed)")
        parser.add_argument("--skip", type=int, default=0,
                            help="Keep one fingerprint in skip + 1 (default: 0)")
        parser.add_argument("--pca", type=Path, default=None,
                            help="PCA model from 'acrfp train-pca' (proposed kind only)")
        parser.add_argument("--out", type=Path, required=True, help="Output DB file")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        fingerprinter = make_fingerprinter(FingerprintKind(args.kind), self.settings, args.pca)
        corpus = load_manifest(args.corpus)
        result = build_db(corpus, fingerprinter, args.skip, threads=self.settings.threads)
        if result.failures:
            self._print_failures(result.failures)
        if result.db.n_contents == 0:
            raise EmptyDatabaseError(f"None of the {len(corpus)} corpus files could be used")

        save_db(args.out, result.db)
        self.console.out(f"Built {result.db!r}: {args.out}", style=Style(color="green"))
        return ExitCode.OK

    def _print_failures(self, failures: Sequence[BuildFailure]) -> None:
        table = Table(title=f"{len(failures)} file(s) left out")
        table.add_column("content_id")
        table.add_column("path")
        table.add_column("reason", style="yellow")
        for failure in failures:
            table.add_row(failure.content_id, failure.path, failure.reason)
        self.console.print(table)
