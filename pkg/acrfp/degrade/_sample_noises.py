import numpy as np
from scipy.signal import lfilter

from ..core import DegradationError

__all__ = ("clip_percentiles", "add_gaussian", "zero_fraction", "shift", "preemphasis",
           "apply_gain",)


def clip_percentiles(x: np.ndarray, percent: float) -> np.ndarray:
    """
    Clamp to the ``percent / 2``-th and ``100 - percent / 2``-th percentiles of `x`.
    """
    low, high = np.percentile(x, [percent / 2, 100 - percent / 2])
    return np.clip(x, low, high)


def add_gaussian(x: np.ndarray, sigma: float, rng: np.random.Generator) -> np.ndarray:
    return x + rng.normal(0.0, sigma, size=x.shape[0])


def zero_fraction(x: np.ndarray, percent: float, rng: np.random.Generator) -> np.ndarray:
    """
    Zero exactly ``round(percent / 100 * len(x))`` distinct positions.
    """
    count = int(round(percent / 100 * x.shape[0]))
    y = x.copy()
    y[rng.choice(x.shape[0], size=count, replace=False)] = 0
    return y


def shift(x: np.ndarray, samples: int) -> np.ndarray:
    if samples >= x.shape[0]:
        raise DegradationError(
            f"Cannot shift {x.shape[0]} samples by {samples}: nothing would remain"
        )
    return x[samples:].copy()


def preemphasis(x: np.ndarray, alpha: float) -> np.ndarray:
    return lfilter([1.0, -alpha], [1.0], x)


def apply_gain(x: np.ndarray, gain_db: float, *, clip: bool = False) -> np.ndarray:
    y = x * 10.0 ** (gain_db / 20.0)
    return np.clip(y, -1.0, 1.0) if clip else y
