from functools import lru_cache

import numpy as np

from ..core import InvalidParameterError
from ._spectrogram import BandKind, BandSpectrogram, Spectrogram

__all__ = ("hz_to_mel", "mel_to_hz", "hz_to_bark", "bark_to_hz",
           "mel_filter_bank", "bark_filter_bank", "mel_project", "bark_project",
           "LOG_FLOOR",)

LOG_FLOOR = 1e-10


def hz_to_mel(f: np.ndarray) -> np.ndarray:
    return 2595.0 * np.log10(1.0 + np.asarray(f, dtype=np.float64) / 700.0)


def mel_to_hz(m: np.ndarray) -> np.ndarray:
    return 700.0 * (10.0 ** (np.asarray(m, dtype=np.float64) / 2595.0) - 1.0)


def hz_to_bark(f: np.ndarray) -> np.ndarray:
    f = np.asarray(f, dtype=np.float64)
    return 13.0 * np.arctan(0.00076 * f) + 3.5 * np.arctan((f / 7500.0) ** 2)


def bark_to_hz(b: np.ndarray, *, f_max: float = 24000.0) -> np.ndarray:
    # bark(f) has no closed-form inverse; it is monotone, so interpolate a dense table
    grid = np.linspace(0.0, f_max, 480_001)
    return np.interp(np.asarray(b, dtype=np.float64), hz_to_bark(grid), grid)


def _check_range(n_bands: int, f_lo: float, f_hi: float, sample_rate: int) -> None:
    if n_bands < 2:
        raise InvalidParameterError(f"At least 2 bands are required, got {n_bands}")
    if f_lo < 0 or f_hi > sample_rate / 2 or f_lo >= f_hi:
        raise InvalidParameterError(
            f"Invalid band range [{f_lo}, {f_hi}] Hz for sample rate {sample_rate} Hz"
        )


@lru_cache(maxsize=32)
def mel_filter_bank(n_bands: int, f_lo: float, f_hi: float,
                    frame_size: int, sample_rate: int) -> np.ndarray:
    """
    Triangular filters ``[band][bin]`` equally spaced on the mel scale, unit peak height.
    """
    _check_range(n_bands, f_lo, f_hi, sample_rate)
    edges = mel_to_hz(np.linspace(hz_to_mel(f_lo), hz_to_mel(f_hi), n_bands + 2))
    freqs = np.arange(frame_size // 2 + 1) * (sample_rate / frame_size)

    lower, center, upper = edges[:-2, None], edges[1:-1, None], edges[2:, None]
    rising = (freqs[None, :] - lower) / (center - lower)
    falling = (upper - freqs[None, :]) / (upper - center)
    weights = np.maximum(0.0, np.minimum(rising, falling))
    weights.setflags(write=False)
    return weights


@lru_cache(maxsize=32)
def bark_filter_bank(n_bands: int, f_lo: float, f_hi: float,
                     frame_size: int, sample_rate: int) -> np.ndarray:
    """
    Rectangular, non-overlapping filters ``[band][bin]`` with edges equally spaced in Bark.

    A bin belongs to band ``j`` when ``edge[j] <= f < edge[j + 1]``; the last band also
    takes a bin lying exactly on `f_hi`.
    """
    _check_range(n_bands, f_lo, f_hi, sample_rate)
    edges = bark_to_hz(np.linspace(hz_to_bark(f_lo), hz_to_bark(f_hi), n_bands + 1),
                       f_max=sample_rate / 2)
    edges[0], edges[-1] = f_lo, f_hi
    freqs = np.arange(frame_size // 2 + 1) * (sample_rate / frame_size)

    band_of_bin = np.searchsorted(edges, freqs, side="right") - 1
    band_of_bin[freqs == f_hi] = n_bands - 1
    weights = np.zeros((n_bands, freqs.size))
    inside = (band_of_bin >= 0) & (band_of_bin < n_bands)
    weights[band_of_bin[inside], np.flatnonzero(inside)] = 1.0
    weights.setflags(write=False)
    return weights


def _project(spec: Spectrogram, weights: np.ndarray, kind: BandKind,
             log_floor: float) -> BandSpectrogram:
    energies = spec.frames @ weights.T
    return BandSpectrogram(np.log(energies + log_floor), kind, weights.shape[0],
                           spec.hop_seconds)


def mel_project(spec: Spectrogram, n_bands: int = 64, f_lo: float = 62.5,
                f_hi: float = 8000.0, *, log_floor: float = LOG_FLOOR) -> BandSpectrogram:
    """
    Pool STFT magnitudes into log mel bands: ``log(sum(weight * magnitude) + floor)``.

    :raises InvalidParameterError: If the frequency range or band count is invalid.
    """
    weights = mel_filter_bank(n_bands, float(f_lo), float(f_hi),
                              spec.frame_size, spec.sample_rate)
    return _project(spec, weights, BandKind.MEL, log_floor)


def bark_project(spec: Spectrogram, n_bands: int = 32, f_lo: float = 0.0,
                 f_hi: float = 8000.0, *, log_floor: float = LOG_FLOOR) -> BandSpectrogram:
    """
    Pool STFT magnitudes into rectangular log Bark bands.

    :raises InvalidParameterError: If the frequency range or band count is invalid.
    """
    weights = bark_filter_bank(n_bands, float(f_lo), float(f_hi),
                               spec.frame_size, spec.sample_rate)
    return _project(spec, weights, BandKind.BARK, log_floor)
