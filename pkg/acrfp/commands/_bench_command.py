from argparse import Namespace
from pathlib import Path

from rich.table import Table

from ..core import ExitCode, KindMismatchError
from ..index import ExhaustiveIndex, Index, IvfIndex, bench_fps, load_index
from ..refdb import load_db, resolve_threads
from ._command import Command

__all__ = ("BenchCommand",)


class BenchCommand(Command):
    """
    Measures search throughput in fingerprints per second.

    Query fingerprints come from another DB of the same kind, e.g. one built from degraded
    recordings; without ``--queries`` the DB's own fingerprints are searched.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("--db", type=Path, required=True, help="Reference DB file")
        parser.add_argument("--index", type=Path, default=None,
                            help="Index built for the DB (default: exhaustive search)")
        parser.add_argument("--queries", type=Path, default=None,
                            help="DB file whose fingerprints are used as queries")
        parser.add_argument("--nprobe", type=int, default=None,
                            help="IVF lists probed per query (default: the index's own)")
        parser.add_argument("-k", type=int, default=None,
                            help="Neighbours per query (default: Match.top_k)")
        parser.add_argument("--runs", type=int, default=None,
                            help="Timed passes (default: Eval.bench_runs)")
        parser.add_argument("--min-queries", type=int, default=None,
                            help="Smallest timed batch (default: Eval.bench_queries)")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        settings = self.settings
        db = load_db(args.db)
        index: Index = load_index(args.index, db) if args.index else ExhaustiveIndex(db)
        if args.nprobe is not None and isinstance(index, IvfIndex):
            index = index.with_nprobe(args.nprobe)

        queries = db if args.queries is None else load_db(args.queries)
        if queries.kind is not db.kind:
            raise KindMismatchError(
                f"Queries hold {queries.kind.value} fingerprints, the DB {db.kind.value}"
            )

        k = settings.match.top_k if args.k is None else args.k
        runs = settings.eval.bench_runs if args.runs is None else args.runs
        min_queries = settings.eval.bench_queries if args.min_queries is None \
            else args.min_queries
        result = bench_fps(index, queries.values, k, runs=runs, min_queries=min_queries,
                           threads=resolve_threads(settings.threads))

        table = Table(title="Retrieval speed")
        table.add_column("index")
        table.add_column("db fingerprints", justify="right")
        table.add_column("queries", justify="right")
        table.add_column("k", justify="right")
        table.add_column("threads", justify="right")
        table.add_column("fps (median)", justify="right", style="green")
        table.add_row(result.index, str(len(db)), str(result.n_queries), str(result.k),
                      str(result.threads), f"{result.fps:,.0f}")
        self.console.print(table)
        return ExitCode.OK
