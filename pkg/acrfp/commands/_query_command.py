from argparse import Namespace
from pathlib import Path

from niltype import Nil

from ..core import ExitCode
from ..index import ExhaustiveIndex, Index, IvfIndex, load_index
from ..matcher import match_segments, segment_stream
from ..refdb import load_db, resolve_threads
from ._command import Command
from ._helpers import load_audio, write_json_lines

__all__ = ("QueryCommand",)


class QueryCommand(Command):
    """
    Identifies a recording against a reference DB, printing one JSON line per segment.

    Query audio is fingerprinted with the model stored in the DB. Without ``--index`` the
    DB is searched exhaustively.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("--db", type=Path, required=True, help="Reference DB file")
        parser.add_argument("--index", type=Path, default=None,
                            help="Index built for the DB (default: exhaustive search)")
        parser.add_argument("--audio", type=Path, required=True, help="Query WAV file")
        parser.add_argument("--seg-len", type=float, default=None,
                            help="Segment length in seconds (default: Match.seg_len)")
        parser.add_argument("--seg-hop", type=float, default=None,
                            help="Seconds between segment starts (default: seg-len)")
        parser.add_argument("--nprobe", type=int, default=None,
                            help="IVF lists probed per query (default: the index's own)")
        parser.add_argument("--ground-truth", default=None,
                            help="Content id to attach to every result")
        parser.add_argument("--out", type=Path, default=None,
                            help="Output JSON-lines file (default: stdout)")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        db = load_db(args.db)
        index: Index = load_index(args.index, db) if args.index else ExhaustiveIndex(db)
        if args.nprobe is not None and isinstance(index, IvfIndex):
            index = index.with_nprobe(args.nprobe)

        match = self.settings.match
        seg_len = match.seg_len if args.seg_len is None else args.seg_len
        if args.seg_hop is not None:
            hop = args.seg_hop
        else:
            hop = match.hop if args.seg_len is None else seg_len

        fingerprints = db.make_fingerprinter().fingerprint(load_audio(args.audio, self.settings))
        ground_truth = Nil if args.ground_truth is None else args.ground_truth
        segments = segment_stream(fingerprints, seg_len, hop, ground_truth=ground_truth)
        cfg = match.config_for(db.kind, db.skip, db.settings)
        results = match_segments(segments, index, cfg,
                                 threads=resolve_threads(self.settings.threads))
        write_json_lines((result.to_dict() for result in results), args.out, self.console)
        return ExitCode.OK
