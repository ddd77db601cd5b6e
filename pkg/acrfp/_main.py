import sys
from argparse import ArgumentParser, HelpFormatter
from dataclasses import replace
from functools import partial
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Type

from ._config import Config
from ._settings import settings_from_config
from .commands import (
    BenchCommand,
    BuildDbCommand,
    BuildIndexCommand,
    Command,
    CommandArgumentParser,
    ConfigCommand,
    ConsoleFactory,
    DegradeCommand,
    EvalCommand,
    FingerprintCommand,
    InspectCommand,
    QueryCommand,
    TrainPcaCommand,
    VersionCommand,
)
from .core import (
    AcrfpError,
    ConfigFileLoader,
    ExitCode,
    InvalidParameterError,
    configure_logging,
    make_console,
    make_error_console,
)

__all__ = ("main", "COMMANDS",)

COMMANDS: Dict[str, Tuple[Type[Command], str]] = {
    "fingerprint": (FingerprintCommand, "Fingerprint an audio file"),
    "train-pca": (TrainPcaCommand, "Train the PCA model of the proposed fingerprint"),
    "build-db": (BuildDbCommand, "Build a reference DB from a corpus manifest"),
    "build-index": (BuildIndexCommand, "Build a search index over a reference DB"),
    "degrade": (DegradeCommand, "Apply a degradation to an audio file"),
    "query": (QueryCommand, "Identify a recording against a reference DB"),
    "eval": (EvalCommand, "Run experiments or synthesize a corpus"),
    "bench": (BenchCommand, "Measure retrieval speed"),
    "inspect": (InspectCommand, "Print the header of a DB, index or model file"),
    "config": (ConfigCommand, "Write the configuration template"),
    "version": (VersionCommand, "Print the version"),
}

# global options that take a value
_VALUED = ("--config", "--threads")


def _split(argv: Sequence[str]) -> Tuple[List[str], Optional[str], List[str]]:
    """
    Split ``[global options] <command> [command args]``.
    """
    position = 0
    while position < len(argv) and argv[position].startswith("-"):
        position += 2 if argv[position] in _VALUED else 1
    if position >= len(argv):
        return list(argv), None, []
    return list(argv[:position]), argv[position], list(argv[position + 1:])


async def main(argv: Optional[Sequence[str]] = None, *,
               console_factory: ConsoleFactory = make_console,
               error_console_factory: ConsoleFactory = make_error_console) -> int:
    """
    Run the `acrfp` command line and return the process exit code.

    Library errors are printed as ``error: <message>`` on stderr and mapped to their exit
    codes; argparse reports usage errors itself and exits with code 2.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    global_args, command, command_args = _split(argv)

    formatter = partial(HelpFormatter, max_help_position=30)
    names = ", ".join(COMMANDS)
    arg_parser = ArgumentParser("acrfp", formatter_class=formatter, allow_abbrev=False,
                                usage="acrfp [options] <command> [args]",
                                description="Compact audio fingerprints for content recognition")
    arg_parser.add_argument("--config", type=Path, default=None,
                            help="JSON file of config overrides (see 'acrfp config init')")
    arg_parser.add_argument("--threads", type=int, default=None,
                            help="Worker threads, 0 for one per core (default: config)")
    arg_parser.add_argument("-v", "--verbose", action="count", default=0,
                            help="Show debug logs")
    arg_parser.add_argument("-q", "--quiet", action="store_true", help="Only show errors")
    arg_parser.epilog = f"commands: {names}"
    args = arg_parser.parse_args(global_args)

    if command is None:
        arg_parser.print_usage(sys.stderr)
        return int(ExitCode.USAGE)
    if command not in COMMANDS:
        arg_parser.error(f"unknown command '{command}', expected one of: {names}")

    error_console = error_console_factory()
    configure_logging(-1 if args.quiet else args.verbose, console=error_console)

    command_cls, description = COMMANDS[command]
    parser = CommandArgumentParser(f"acrfp {command}", argv=command_args,
                                   formatter_class=formatter, description=description)
    try:
        config = await ConfigFileLoader(Config).load(args.config)
        settings = settings_from_config(config)
        if args.threads is not None:
            if args.threads < 0:
                raise InvalidParameterError(f"--threads must be >= 0, got {args.threads}")
            settings = replace(settings, threads=args.threads)
        return int(await command_cls(config, parser, settings=settings,
                                     console_factory=console_factory).run())
    except AcrfpError as e:
        error_console.out(f"error: {e}", style="red")
        return int(e.exit_code)
