from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy.signal import lfilter

from ..core import DegradationError
from ._sample_noises import apply_gain

__all__ = ("k_weighting", "measure_loudness", "normalize_loudness",)

Biquad = Tuple[np.ndarray, np.ndarray]


def _high_shelf(rate: int, fc: float, gain_db: float, q: float) -> Biquad:
    a = 10 ** (gain_db / 40)
    w0 = 2 * np.pi * fc / rate
    alpha = np.sin(w0) / (2 * q)
    cos_w0 = np.cos(w0)
    sqrt_a = 2 * np.sqrt(a) * alpha
    b = np.array([
        a * ((a + 1) + (a - 1) * cos_w0 + sqrt_a),
        -2 * a * ((a - 1) + (a + 1) * cos_w0),
        a * ((a + 1) + (a - 1) * cos_w0 - sqrt_a),
    ])
    den = np.array([
        (a + 1) - (a - 1) * cos_w0 + sqrt_a,
        2 * ((a - 1) - (a + 1) * cos_w0),
        (a + 1) - (a - 1) * cos_w0 - sqrt_a,
    ])
    return b / den[0], den / den[0]


def _high_pass(rate: int, fc: float, q: float) -> Biquad:
    w0 = 2 * np.pi * fc / rate
    alpha = np.sin(w0) / (2 * q)
    cos_w0 = np.cos(w0)
    b = np.array([(1 + cos_w0) / 2, -(1 + cos_w0), (1 + cos_w0) / 2])
    den = np.array([1 + alpha, -2 * cos_w0, 1 - alpha])
    return b / den[0], den / den[0]


@lru_cache(maxsize=8)
def k_weighting(rate: int) -> Tuple[Biquad, Biquad]:
    """
    Two-stage K-weighting at `rate`: a +4 dB shelf above ~1.5 kHz, then a ~38 Hz high-pass.
    """
    return _high_shelf(rate, 1500.0, 4.0, 1 / np.sqrt(2)), _high_pass(rate, 38.0, 0.5)


def measure_loudness(x: np.ndarray, rate: int) -> float:
    """
    Ungated loudness in LUFS, ``-0.691 + 10 log10(mean square of the K-weighted signal)``.

    :raises DegradationError: If the weighted signal is silent.
    """
    shelf, high_pass = k_weighting(rate)
    y = lfilter(*high_pass, lfilter(*shelf, np.asarray(x, dtype=np.float64)))
    power = float(np.mean(np.square(y)))
    if power <= 0.0:
        raise DegradationError("Cannot measure the loudness of silence")
    return -0.691 + 10 * np.log10(power)


def normalize_loudness(x: np.ndarray, target_lufs: float, rate: int) -> np.ndarray:
    return apply_gain(x, target_lufs - measure_loudness(x, rate))
