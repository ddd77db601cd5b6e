from typing import Tuple

import numpy as np
from scipy.signal import istft, stft

from ..core import InvalidParameterError
from ._settings import DegradeSettings

__all__ = ("freq_mask", "equalise", "band_slots", "masked_bins",)


def _analyze(x: np.ndarray, settings: DegradeSettings) -> Tuple[np.ndarray, np.ndarray]:
    freqs, _, spec = stft(x, fs=settings.sample_rate, window="hann",
                          nperseg=settings.frame_size,
                          noverlap=settings.frame_size - settings.hop)
    return freqs, spec


def _synthesize(spec: np.ndarray, n: int, settings: DegradeSettings) -> np.ndarray:
    _, y = istft(spec, fs=settings.sample_rate, window="hann", nperseg=settings.frame_size,
                 noverlap=settings.frame_size - settings.hop)
    if y.shape[0] < n:
        y = np.pad(y, (0, n - y.shape[0]))
    return y[:n]


def band_slots(rng: np.random.Generator, count: int, width_hz: float,
               nyquist: float) -> np.ndarray:
    """
    Pick `count` distinct slots of `width_hz` below `nyquist`, sorted by frequency.

    Slot ``k`` covers ``[k * width_hz, (k + 1) * width_hz)``.
    """
    n_slots = int(nyquist // width_hz)
    if not 0 <= count <= n_slots:
        raise InvalidParameterError(
            f"Cannot pick {count} disjoint {width_hz:g} Hz bands below {nyquist:g} Hz "
            f"(only {n_slots} fit)"
        )
    return np.sort(rng.choice(n_slots, size=count, replace=False))


def masked_bins(freqs: np.ndarray, slots: np.ndarray, width_hz: float) -> np.ndarray:
    """
    Boolean mask of the STFT bins whose centre frequency falls inside any of `slots`.
    """
    slot_of_bin = np.floor(freqs / width_hz).astype(np.int64)
    return np.isin(slot_of_bin, slots)


def freq_mask(x: np.ndarray, bands: int, rng: np.random.Generator,
              settings: DegradeSettings) -> np.ndarray:
    """
    Remove `bands` random, disjoint frequency bands of ``settings.mask_band_hz`` each.

    The masked STFT is resynthesized and re-masked ``settings.mask_iterations`` times so
    the energy that overlap-add leaks back into the masked bins stays negligible.
    """
    n = x.shape[0]
    slots = band_slots(rng, bands, settings.mask_band_hz, settings.nyquist)
    if slots.size == 0:
        return x.copy()
    y = x.astype(np.float64)
    for _ in range(settings.mask_iterations):
        freqs, spec = _analyze(y, settings)
        spec[masked_bins(freqs, slots, settings.mask_band_hz)] = 0
        y = _synthesize(spec, n, settings)
    return y


def equalise(x: np.ndarray, gain_db: float, rng: np.random.Generator,
             settings: DegradeSettings) -> np.ndarray:
    """
    Scale ``settings.eq_bands`` random bands by ``+gain_db, -gain_db, +gain_db, ...``.

    Gains alternate in order of increasing band frequency.
    """
    slots = band_slots(rng, settings.eq_bands, settings.eq_band_hz, settings.nyquist)
    freqs, spec = _analyze(x.astype(np.float64), settings)
    for index, slot in enumerate(slots):
        sign = 1.0 if index % 2 == 0 else -1.0
        rows = masked_bins(freqs, np.array([slot]), settings.eq_band_hz)
        spec[rows] *= 10.0 ** (sign * gain_db / 20.0)
    return _synthesize(spec, x.shape[0], settings)
