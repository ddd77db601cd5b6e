from argparse import Namespace
from pathlib import Path

from rich.style import Style

from ..audio import save_wav
from ..core import ExitCode
from ..degrade import apply_noise, parse_noise
from ._command import Command
from ._helpers import load_audio

__all__ = ("DegradeCommand",)


class DegradeCommand(Command):
    """
    Applies one degradation to a WAV file and writes the result as 32-bit float PCM.
    """

    def _parse(self) -> Namespace:
        parser = self._arg_parser
        parser.add_argument("input", type=Path, help="Input WAV file")
        parser.add_argument("output", type=Path, help="Output WAV file")
        parser.add_argument("--noise", required=True,
                            help="Noise kind or expression, e.g. 'volume', 'shifted_45', "
                                 "'composite(10%%, 0.02, random)'")
        parser.add_argument("--param", action="append", default=[],
                            help="Noise parameter; repeat for several (e.g. 10%%, random)")
        parser.add_argument("--seed", type=int, default=0, help="Noise seed (default: 0)")
        return parser.parse_args()

    async def run(self) -> ExitCode:
        args = self._parse()
        expr = args.noise
        if args.param:
            expr = f"{expr}({', '.join(args.param)})"
        spec = parse_noise(expr, args.seed)

        audio = load_audio(args.input, self.settings)
        degraded = apply_noise(audio, spec, self.settings.degrade)
        save_wav(args.output, degraded)
        self.console.out(f"Applied {spec}: {args.output}", style=Style(color="green"))
        return ExitCode.OK
