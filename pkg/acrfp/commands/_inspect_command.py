from argparse import Namespace
from pathlib import Path
from typing import Any, List, Tuple

from rich.style import Style
from rich.table import Table

from ..core import ExitCode, MagicMismatchError, read_artifact
from ..fingerprint.proposed import PCA_MAGIC, load_pca
from ..index import INDEX_MAGIC, read_index_header
from ..refdb import DB_MAGIC, ReferenceDB, decode_db
from ._command import Command

__all__ = ("InspectCommand",)

Fields = List[Tuple[str, Any]]


class InspectCommand(Command):
    """
    Prints the header of a reference DB, index or PCA model file.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("path", type=Path, help="ACDB, ACIX or ACPC file")
        parser.add_argument("--contents", action="store_true",
                            help="List every content of a DB with its fingerprint count")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        data = read_artifact(args.path, "artifact")
        magic = data[:4]
        name = str(args.path)

        if magic == DB_MAGIC:
            db = decode_db(data, name=name)
            self._print_fields("Reference DB", self._db_fields(db))
            if args.contents:
                self._print_contents(db)
        elif magic == INDEX_MAGIC:
            header = read_index_header(data, name=name)
            self._print_fields("Index", [
                ("type", header.index_type.value),
                ("kind", header.kind.value),
                ("nlist", header.nlist),
                ("nprobe", header.nprobe),
                ("seed", header.seed),
                ("dims", header.dims),
                ("db fingerprints", header.db_fingerprints),
                ("db digest", f"{header.db_digest:08x}"),
            ])
        elif magic == PCA_MAGIC:
            model = load_pca(args.path)
            retained = float(model.explained_variance.sum())
            self._print_fields("PCA model", [
                ("in dims", model.in_dims),
                ("out dims", model.out_dims),
                ("trained on", model.trained_on),
                ("explained variance", f"{retained:.6f}"),
            ])
        else:
            raise MagicMismatchError(f"'{name}' is not an ACDB, ACIX or ACPC file "
                                     f"(magic {bytes(magic)!r})")
        return ExitCode.OK

    def _db_fields(self, db: ReferenceDB) -> Fields:
        if db.pca is not None:
            model = f"PCA {db.pca.in_dims} -> {db.pca.out_dims}"
        elif db.minhash is not None:
            model = f"min-hash top_t={db.minhash.top_t} seed={db.minhash.seed}"
        else:
            model = "none"
        return [
            ("kind", db.kind.value),
            ("skip", db.skip),
            ("contents", db.n_contents),
            ("fingerprints", len(db)),
            ("dims", db.dims),
            ("spacing", f"{db.spacing:.6f}s"),
            ("model", model),
            ("digest", f"{db.digest:08x}"),
        ]

    def _print_fields(self, title: str, fields: Fields) -> None:
        self.console.out(title, style=Style(color="blue", bold=True))
        for key, value in fields:
            self.console.out(f"  {key}: ", style=Style(color="blue"), end="")
            self.console.out(str(value))

    def _print_contents(self, db: ReferenceDB) -> None:
        table = Table()
        table.add_column("content_id")
        table.add_column("fingerprints", justify="right")
        for entry in db:
            table.add_row(entry.content_id, str(len(entry)))
        self.console.print(table)
