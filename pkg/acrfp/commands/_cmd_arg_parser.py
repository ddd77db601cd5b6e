from argparse import ArgumentParser, Namespace
from typing import Any, List, Optional, Sequence, Tuple

__all__ = ("CommandArgumentParser",)


class CommandArgumentParser(ArgumentParser):
    """
    Argument parser of a single subcommand.

    It is created with the arguments that follow the subcommand name, so a command calls
    `parse_args()` without knowing how it was invoked. Abbreviated options are refused.
    """

    def __init__(self, *args: Any, argv: Sequence[str] = (), **kwargs: Any) -> None:
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)
        self._argv = list(argv)

    def parse_known_args(self, args: Optional[Sequence[str]] = None,  # type: ignore
                         namespace: Optional[Namespace] = None) -> Tuple[Namespace, List[str]]:
        args = self._argv if args is None else list(args)
        return super().parse_known_args(args, namespace)
