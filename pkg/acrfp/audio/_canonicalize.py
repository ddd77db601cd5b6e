from functools import lru_cache
from math import gcd

import numpy as np
from scipy.signal import firwin, resample_poly

from ..core import InvalidParameterError, SampleRateError
from ._audio_buffer import AudioBuffer

__all__ = ("canonicalize", "downmix", "resample",
           "CANONICAL_RATE", "MIN_INPUT_RATE", "KAISER_BETA", "TAPS_PER_PHASE",)

CANONICAL_RATE = 16000
MIN_INPUT_RATE = 8000
KAISER_BETA = 8.6
TAPS_PER_PHASE = 64


def downmix(samples: np.ndarray) -> np.ndarray:
    """
    Average the channels of ``[frames][channels]`` samples into float32 mono.
    """
    if samples.ndim == 1:
        return samples.astype(np.float32)
    if samples.shape[1] not in (1, 2):
        raise InvalidParameterError(f"Expected 1 or 2 channels, got {samples.shape[1]}")
    return samples.mean(axis=1, dtype=np.float64).astype(np.float32)


@lru_cache(maxsize=16)
def _kernel(up: int, down: int, taps_per_phase: int, beta: float) -> np.ndarray:
    max_rate = max(up, down)
    half_len = (taps_per_phase // 2) * max_rate
    kernel = firwin(2 * half_len + 1, 1.0 / max_rate, window=("kaiser", beta))
    kernel.setflags(write=False)
    return kernel


def resample(samples: np.ndarray, rate: int, target_rate: int, *,
             taps_per_phase: int = TAPS_PER_PHASE, kaiser_beta: float = KAISER_BETA) -> np.ndarray:
    """
    Resample mono samples with a Kaiser-windowed sinc polyphase filter.

    The kernel depends only on the rate ratio, so output is reproducible across runs.
    """
    if rate == target_rate:
        return samples.astype(np.float32)
    common = gcd(rate, target_rate)
    up, down = target_rate // common, rate // common
    kernel = _kernel(up, down, taps_per_phase, float(kaiser_beta))
    out = resample_poly(samples.astype(np.float64), up, down, window=np.array(kernel))
    return out.astype(np.float32)


def canonicalize(audio: AudioBuffer, *, target_rate: int = CANONICAL_RATE,
                 min_rate: int = MIN_INPUT_RATE, taps_per_phase: int = TAPS_PER_PHASE,
                 kaiser_beta: float = KAISER_BETA) -> AudioBuffer:
    """
    Downmix to mono and resample to the canonical rate.

    A mono buffer already at `target_rate` passes through with identical samples, which
    makes the operation idempotent.

    :param audio: Mono or stereo audio at any rate of at least `min_rate`.
    :return: Mono float32 audio at `target_rate`.
    :raises SampleRateError: If the input rate is below `min_rate`.
    """
    if audio.sample_rate < min_rate:
        raise SampleRateError(
            f"Sample rate {audio.sample_rate} Hz is below the minimum of {min_rate} Hz"
        )
    mono = downmix(audio.samples)
    if audio.sample_rate == target_rate:
        return AudioBuffer(mono, target_rate)
    resampled = resample(mono, audio.sample_rate, target_rate,
                         taps_per_phase=taps_per_phase, kaiser_beta=kaiser_beta)
    return AudioBuffer(resampled, target_rate)
