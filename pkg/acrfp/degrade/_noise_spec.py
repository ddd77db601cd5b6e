from dataclasses import dataclass
from typing import Tuple, Union

from ..core import InvalidParameterError
from ._noise_kind import NoiseKind

__all__ = ("NoiseSpec", "NoiseParam", "RANDOM",)

RANDOM = "random"

NoiseParam = Union[float, str]

# kind -> number of parameters
_ARITY = {
    NoiseKind.CLEAN: 0,
    NoiseKind.FREQ_MASK: 1,
    NoiseKind.CLIPPING: 1,
    NoiseKind.EQUALISATION: 1,
    NoiseKind.GAUSSIAN: 1,
    NoiseKind.LOSSY: 1,
    NoiseKind.SHIFTED: 1,
    NoiseKind.COMPOSITE: 3,
    NoiseKind.LOUDNESS_NORM: 1,
    NoiseKind.PREEMPHASIS: 1,
    NoiseKind.TIME_STRETCH: 1,
    NoiseKind.VOLUME: 1,
    NoiseKind.TRANSCODE: 1,
}


def _fmt(value: NoiseParam) -> str:
    if isinstance(value, str):
        return value
    return f"{value:g}"


@dataclass(frozen=True)
class NoiseSpec:
    """
    One degradation: its kind, parameters and seed.

    Percent-valued parameters (clipping, lossy and the first composite parameter) are given
    in percent, so ``10`` means 10%. Only the composite shift may be ``"random"``.
    """

    kind: NoiseKind
    params: Tuple[NoiseParam, ...] = ()
    seed: int = 0

    def __post_init__(self) -> None:
        params = tuple(p if isinstance(p, str) else float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        arity = _ARITY[self.kind]
        if len(params) != arity:
            raise InvalidParameterError(
                f"Noise '{self.kind.value}' takes {arity} parameter(s), got {len(params)}"
            )
        for index, param in enumerate(params):
            if isinstance(param, str):
                if param != RANDOM or self.kind is not NoiseKind.COMPOSITE or index != 2:
                    raise InvalidParameterError(
                        f"Noise '{self.kind.value}' does not accept {param!r} "
                        f"as parameter {index + 1}"
                    )
        self._validate_ranges()

    def _validate_ranges(self) -> None:
        kind = self.kind
        if kind is NoiseKind.CLEAN:
            return
        x = float(self.params[0])
        if kind is NoiseKind.FREQ_MASK and (x < 0 or not x.is_integer()):
            raise InvalidParameterError(f"freq_mask needs a whole number of bands, got {x:g}")
        if kind in (NoiseKind.CLIPPING, NoiseKind.LOSSY, NoiseKind.COMPOSITE) \
                and not 0 <= x <= 100:
            raise InvalidParameterError(f"{kind.value} percentage must be in [0, 100], got {x:g}")
        if kind in (NoiseKind.GAUSSIAN, NoiseKind.PREEMPHASIS) and x < 0:
            raise InvalidParameterError(f"{kind.value} parameter must be >= 0, got {x:g}")
        if kind is NoiseKind.SHIFTED and (x < 0 or not x.is_integer()):
            raise InvalidParameterError(f"shifted needs a whole number of samples, got {x:g}")
        if kind in (NoiseKind.TIME_STRETCH, NoiseKind.TRANSCODE) and x <= 0:
            raise InvalidParameterError(f"{kind.value} parameter must be > 0, got {x:g}")
        if kind is NoiseKind.COMPOSITE:
            sigma, shift = float(self.params[1]), self.params[2]
            if sigma < 0:
                raise InvalidParameterError(f"composite noise level must be >= 0, got {sigma:g}")
            if isinstance(shift, float) and (shift < 0 or not shift.is_integer()):
                raise InvalidParameterError(
                    f"composite shift must be a whole number of samples, got {shift:g}"
                )

    @property
    def label(self) -> str:
        """
        Canonical expression, e.g. ``composite(10%, 0.02, random)``; parses back to `self`.
        """
        if self.kind is NoiseKind.CLEAN:
            return self.kind.value
        args = [_fmt(p) for p in self.params]
        if self.kind in (NoiseKind.CLIPPING, NoiseKind.LOSSY, NoiseKind.COMPOSITE):
            args[0] += "%"
        return f"{self.kind.value}({', '.join(args)})"

    def with_seed(self, seed: int) -> "NoiseSpec":
        return NoiseSpec(self.kind, self.params, seed)

    def __str__(self) -> str:
        return self.label
