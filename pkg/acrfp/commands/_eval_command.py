from argparse import Namespace
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from rich.style import Style

from ..core import ConfigType, Dispatcher, ExitCode, Subscriber
from ..eval import (
    EvalContext,
    ExperimentRunner,
    RichReporter,
    SilentReporter,
    load_experiment_spec,
    synthesize_corpus,
)
from ..refdb import resolve_threads
from ._cmd_arg_parser import CommandArgumentParser
from ._command import Command

__all__ = ("EvalCommand",)

ReporterFactory = Callable[[], Subscriber]


class EvalCommand(Command):
    """
    Runs the experiment suite (``eval run``) or writes a synthetic corpus (``eval synth``).

    ``eval run`` exits with 1 when any cell fails to run; skipped cells do not count.
    """

    def __init__(self, config: ConfigType, arg_parser: CommandArgumentParser, *,
                 reporters: Optional[Dict[str, ReporterFactory]] = None,
                 **kwargs: Any) -> None:
        super().__init__(config, arg_parser, **kwargs)
        self._reporters = reporters or {"rich": RichReporter, "silent": SilentReporter}

    def _parse(self) -> Namespace:
        actions = self._arg_parser.add_subparsers(dest="action", metavar="{run,synth}")
        actions.required = True

        run = actions.add_parser("run", help="Run the experiments of a spec file")
        run.add_argument("--spec", type=Path, required=True, help="Experiment spec JSON file")
        run.add_argument("--out", type=Path, default=None,
                         help="Output directory (default: the experiment file's 'out')")
        run.add_argument("--reporter", choices=sorted(self._reporters), default="rich",
                         help="Progress output (default: rich)")

        synth = actions.add_parser("synth", help="Write a synthetic music-like corpus")
        synth.add_argument("--out", type=Path, required=True, help="Output directory")
        synth.add_argument("--clips", type=int, default=200, help="Clip count (default: 200)")
        synth.add_argument("--seconds", type=float, default=30.0,
                           help="Clip length in seconds (default: 30)")
        synth.add_argument("--seed", type=int, default=0, help="Corpus seed (default: 0)")
        return self._arg_parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        if args.action == "synth":
            return self._synth(args)
        return await self._run(args)

    def _synth(self, args: Namespace) -> ExitCode:
        items = synthesize_corpus(args.out, args.clips, args.seconds, seed=args.seed,
                                  sample_rate=self.settings.pipeline.sample_rate)
        self.console.out(f"Wrote {len(items)} clips: {args.out / 'manifest.json'}",
                         style=Style(color="green"))
        return ExitCode.OK

    async def _run(self, args: Namespace) -> ExitCode:
        spec = load_experiment_spec(args.spec, out_dir=args.out)
        context = EvalContext.load(spec, self.settings)

        dispatcher = Dispatcher()
        dispatcher.register(self._reporters[args.reporter]())
        runner = ExperimentRunner(dispatcher, threads=resolve_threads(self.settings.threads))
        report = await runner.run(context)
        return report.exit_code
