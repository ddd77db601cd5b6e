from argparse import Namespace
from pathlib import Path

from ..core import ExitCode
from ..fingerprint import FingerprintKind
from ._command import Command
from ._helpers import KIND_CHOICES, load_audio, make_fingerprinter, write_json_lines

__all__ = ("FingerprintCommand",)


class FingerprintCommand(Command):
    """
    Fingerprints one audio file and prints the fingerprints as JSON lines.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("audio", type=Path, help="WAV file to fingerprint")
        parser.add_argument("--kind", choices=KIND_CHOICES, default="proposed",
                            help="Fingerprint kind (default: proposed)")
        parser.add_argument("--pca", type=Path, default=None,
                            help="PCA model from 'acrfp train-pca' (proposed kind only)")
        parser.add_argument("--skip", type=int, default=0,
                            help="Keep one fingerprint in skip + 1 (default: 0)")
        parser.add_argument("--out", type=Path, default=None,
                            help="Output JSON-lines file (default: stdout)")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        kind = FingerprintKind(args.kind)
        fingerprinter = make_fingerprinter(kind, self.settings, args.pca)
        fingerprints = fingerprinter.fingerprint(load_audio(args.audio, self.settings))
        if args.skip:
            fingerprints = fingerprints.skip(args.skip)

        records = ({"timestamp": round(float(t), 6), "values": v.tolist()}
                   for t, v in zip(fingerprints.timestamps, fingerprints.values))
        write_json_lines(records, args.out, self.console)
        return ExitCode.OK
