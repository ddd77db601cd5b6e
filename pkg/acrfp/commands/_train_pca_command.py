from argparse import Namespace
from dataclasses import replace
from pathlib import Path

from rich.style import Style

from ..core import ExitCode, InvalidParameterError
from ..fingerprint import save_pca
from ..refdb import CorpusItem, load_manifest, train_pca_on_corpus
from ._command import Command

__all__ = ("TrainPcaCommand",)


class TrainPcaCommand(Command):
    """
    Trains the PCA model of the proposed fingerprint on a corpus and saves it as ``ACPC``.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("audio", type=Path, nargs="*", help="WAV files to train on")
        parser.add_argument("--corpus", type=Path, default=None,
                            help="Corpus manifest (JSON list of {id, path})")
        parser.add_argument("--out", type=Path, required=True, help="Output model file")
        parser.add_argument("--seed", type=int, default=None,
                            help="Sampling seed (default: Proposed.pca_seed)")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        corpus = load_manifest(args.corpus) if args.corpus is not None else []
        corpus += [CorpusItem(path.stem, path) for path in args.audio]
        if not corpus:
            raise InvalidParameterError("Nothing to train on: pass --corpus or audio files")

        pca = self.settings.pca
        if args.seed is not None:
            pca = replace(pca, seed=args.seed)
        model = train_pca_on_corpus(corpus, self.settings.pipeline, pca,
                                    threads=self.settings.threads)
        save_pca(args.out, model)

        self.console.out(f"Trained PCA {model.in_dims} -> {model.out_dims} on "
                         f"{model.trained_on} samples: {args.out}", style=Style(color="green"))
        return ExitCode.OK
