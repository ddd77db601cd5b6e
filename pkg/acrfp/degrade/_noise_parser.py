import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from pyparsing import CaselessKeyword, DelimitedList, Group
from pyparsing import Optional as Opt
from pyparsing import ParserElement as Parser
from pyparsing import ParseResults, Regex, Suppress
from pyparsing.exceptions import ParseException

from ..core import InvalidParameterError
from ._noise_kind import NoiseKind
from ._noise_spec import RANDOM, NoiseParam, NoiseSpec

__all__ = ("NoiseParser", "parse_noise",)

_PERCENT_KINDS = (NoiseKind.CLIPPING, NoiseKind.LOSSY, NoiseKind.COMPOSITE)


@dataclass(frozen=True)
class _Arg:
    value: NoiseParam
    percent: bool = False


@dataclass(frozen=True)
class _Parsed:
    kind: NoiseKind
    params: Tuple[NoiseParam, ...]


class NoiseParser:
    """
    Parses noise expressions into `NoiseSpec` objects.

    Two forms are accepted:

    * calls: ``clean``, ``volume(-6)``, ``lossy(10%)``, ``composite(10%, 0.02, random)``;
    * table-style names: ``shifted_45``, ``volume_-6db``, ``lossy_10_perc``,
      ``clipping_distortion_20``, ``wav_to_mp3_fixed_br_32``, ``time_stretch_1.04`` and so on.

    Percent signs are only allowed where the parameter is a percentage.
    """

    number_pattern = r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"

    # table-style prefix -> kind; longest prefixes must win
    aliases: Dict[str, NoiseKind] = {
        "clipping_distortion_": NoiseKind.CLIPPING,
        "wav_to_mp3_fixed_br_": NoiseKind.TRANSCODE,
        "gaussian_noise_": NoiseKind.GAUSSIAN,
        "loudness_norm_": NoiseKind.LOUDNESS_NORM,
        "equalisation_": NoiseKind.EQUALISATION,
        "time_stretch_": NoiseKind.TIME_STRETCH,
        "preemphasis_": NoiseKind.PREEMPHASIS,
        "freq_mask_": NoiseKind.FREQ_MASK,
        "shifted_": NoiseKind.SHIFTED,
        "volume_": NoiseKind.VOLUME,
        "lossy_": NoiseKind.LOSSY,
    }

    def __init__(self) -> None:
        number = Regex(self.number_pattern).set_parse_action(self._create_number)
        percent = Regex(self.number_pattern + "%").set_parse_action(self._create_percent)
        random = CaselessKeyword(RANDOM).set_parse_action(lambda: _Arg(RANDOM))
        arg = percent | number | random

        name = Regex(r"[A-Za-z_][A-Za-z0-9_]*")
        args = Suppress("(") + Group(Opt(DelimitedList(arg))) + Suppress(")")
        call = (name + args[0, 1]).set_parse_action(self._create_call)

        prefixes = "|".join(re.escape(p) for p in sorted(self.aliases, key=len, reverse=True))
        alias = Regex(
            rf"(?P<prefix>{prefixes})(?P<value>{self.number_pattern})(?P<suffix>db|_perc)?\b",
            re.IGNORECASE,
        ).set_parse_action(self._create_alias)

        self._parser: Parser = alias | call

    def parse(self, expr: str, seed: int = 0) -> NoiseSpec:
        """
        Parse a noise expression.

        :param expr: The expression, e.g. ``"composite(5%, 0.01, 45)"`` or ``"shifted_90"``.
        :param seed: Seed stored in the resulting spec.
        :return: The parsed spec.
        :raises InvalidParameterError: If the expression is malformed, names an unknown
                                       noise or has parameters of the wrong number or range.
        """
        try:
            results = self._parser.parse_string(expr.strip(), parse_all=True)
        except ParseException as e:
            raise InvalidParameterError(f"Invalid noise expr {expr!r}. Error: {e}") from None
        if len(results) == 0:
            raise InvalidParameterError(f"Invalid noise expr {expr!r}")
        parsed = results[0]
        return NoiseSpec(parsed.kind, parsed.params, seed)

    def _create_number(self, orig: str, location: int, tokens: ParseResults) -> _Arg:
        return _Arg(float(tokens[0]))

    def _create_percent(self, orig: str, location: int, tokens: ParseResults) -> _Arg:
        return _Arg(float(tokens[0][:-1]), percent=True)

    def _create_call(self, orig: str, location: int, tokens: ParseResults) -> _Parsed:
        name = tokens[0].lower()
        kind = self._kind(name)
        args = tokens[1] if len(tokens) > 1 else []
        for index, arg in enumerate(args):
            if arg.percent and (kind not in _PERCENT_KINDS or index != 0):
                raise InvalidParameterError(
                    f"Parameter {index + 1} of '{name}' is not a percentage"
                )
        return _Parsed(kind, tuple(arg.value for arg in args))

    def _create_alias(self, orig: str, location: int, tokens: ParseResults) -> _Parsed:
        prefix, value = tokens["prefix"].lower(), tokens["value"]
        suffix = (tokens.get("suffix") or "").lower()
        kind = self.aliases[prefix]
        expected = {NoiseKind.VOLUME: "db", NoiseKind.LOSSY: "_perc"}.get(kind, "")
        if suffix != expected:
            raise InvalidParameterError(
                f"Noise alias '{tokens[0]}' must end with '{expected}' after the value"
                if expected else f"Noise alias '{tokens[0]}' takes no suffix"
            )
        return _Parsed(kind, (float(value),))

    def _kind(self, name: str) -> NoiseKind:
        try:
            return NoiseKind(name)
        except ValueError:
            known = ", ".join(k.value for k in NoiseKind)
            raise InvalidParameterError(f"Unknown noise '{name}', expected one of: {known}") \
                from None


_parser: Optional[NoiseParser] = None


def parse_noise(expr: str, seed: int = 0) -> NoiseSpec:
    global _parser
    if _parser is None:
        _parser = NoiseParser()
    return _parser.parse(expr, seed)
