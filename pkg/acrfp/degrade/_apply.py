from typing import Callable, Dict, Optional

import numpy as np

from ..audio import AudioBuffer
from ..core import InvalidParameterError, derive_seed
from ._loudness import normalize_loudness
from ._noise_kind import NoiseKind
from ._noise_spec import RANDOM, NoiseSpec
from ._sample_noises import (
    add_gaussian,
    apply_gain,
    clip_percentiles,
    preemphasis,
    shift,
    zero_fraction,
)
from ._settings import DegradeSettings
from ._spectral_noises import equalise, freq_mask
from ._time_stretch import wsola
from ._transcode import transcode_mp3

__all__ = ("apply_noise", "composite_shift",)

NoiseHandler = Callable[[np.ndarray, NoiseSpec, DegradeSettings], np.ndarray]


def _rng(spec: NoiseSpec, *parts: str) -> np.random.Generator:
    return np.random.default_rng(derive_seed(spec.seed, spec.kind.value, *parts))


def composite_shift(spec: NoiseSpec) -> int:
    """
    Shift in samples used by a composite noise; ``random`` draws from ``[1, 255]``.
    """
    value = spec.params[2]
    if value == RANDOM:
        return int(_rng(spec, "shift").integers(1, 256))
    return int(float(value))


def _composite(x: np.ndarray, spec: NoiseSpec, settings: DegradeSettings) -> np.ndarray:
    percent, sigma = float(spec.params[0]), float(spec.params[1])
    y = zero_fraction(x, percent, _rng(spec, "lossy"))
    y = add_gaussian(y, sigma, _rng(spec, "gaussian"))
    return shift(y, composite_shift(spec))


def _x(spec: NoiseSpec) -> float:
    return float(spec.params[0])


_HANDLERS: Dict[NoiseKind, NoiseHandler] = {
    NoiseKind.CLEAN: lambda x, spec, s: x.copy(),
    NoiseKind.FREQ_MASK: lambda x, spec, s: freq_mask(x, int(_x(spec)), _rng(spec), s),
    NoiseKind.CLIPPING: lambda x, spec, s: clip_percentiles(x, _x(spec)),
    NoiseKind.EQUALISATION: lambda x, spec, s: equalise(x, _x(spec), _rng(spec), s),
    NoiseKind.GAUSSIAN: lambda x, spec, s: add_gaussian(x, _x(spec), _rng(spec)),
    NoiseKind.LOSSY: lambda x, spec, s: zero_fraction(x, _x(spec), _rng(spec)),
    NoiseKind.SHIFTED: lambda x, spec, s: shift(x, int(_x(spec))),
    NoiseKind.COMPOSITE: _composite,
    NoiseKind.LOUDNESS_NORM: lambda x, spec, s: normalize_loudness(x, _x(spec), s.sample_rate),
    NoiseKind.PREEMPHASIS: lambda x, spec, s: preemphasis(x, _x(spec)),
    NoiseKind.TIME_STRETCH: lambda x, spec, s: wsola(
        x, _x(spec), s.sample_rate, window_ms=s.wsola_window_ms,
        tolerance_ms=s.wsola_tolerance_ms),
    NoiseKind.VOLUME: lambda x, spec, s: apply_gain(x, _x(spec), clip=True),
    NoiseKind.TRANSCODE: lambda x, spec, s: transcode_mp3(x, s.sample_rate, _x(spec),
                                                          s.transcoder),
}


def apply_noise(audio: AudioBuffer, spec: NoiseSpec,
                settings: Optional[DegradeSettings] = None) -> AudioBuffer:
    """
    Degrade canonical audio.

    Every random choice is derived from ``spec.seed``, so the same audio and spec always
    give bit-identical output. Only ``shifted``, ``composite`` and ``time_stretch`` change
    the length.

    :param audio: Canonical (mono, ``settings.sample_rate``) audio.
    :param spec: The degradation to apply.
    :param settings: Fixed degradation parameters, defaults if omitted.
    :return: Degraded float32 audio at the same rate.
    :raises InvalidParameterError: If the audio is not canonical.
    :raises TranscoderUnavailableError: For ``transcode`` without an encoder binary.
    :raises DegradationError: If the degradation cannot be applied to this audio.
    """
    settings = settings or DegradeSettings()
    if not audio.is_mono() or audio.sample_rate != settings.sample_rate:
        raise InvalidParameterError(
            f"Noise expects mono {settings.sample_rate} Hz audio, got {audio!r}"
        )
    samples = np.asarray(audio.samples, dtype=np.float64)
    degraded = _HANDLERS[spec.kind](samples, spec, settings)
    return AudioBuffer(degraded.astype(np.float32), audio.sample_rate)
