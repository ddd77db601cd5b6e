from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..core import InvalidParameterError, SignalTooShortError
from ..spectral import BandSpectrogram

__all__ = ("WindowConfig", "sliding_windows", "window_count", "window_starts",
           "window_timestamps", "time_average", "window_means", "require_window", "RunningMean",)


@dataclass(frozen=True)
class WindowConfig:
    """
    Sliding window geometry over a band spectrogram, in timesteps.
    """

    window_len: int = 64
    stride: int = 8

    def __post_init__(self) -> None:
        if not 1 <= self.stride < self.window_len:
            raise InvalidParameterError(
                f"Window needs 1 <= stride < window_len, got stride={self.stride}, "
                f"window_len={self.window_len}"
            )


def window_count(n_timesteps: int, cfg: WindowConfig) -> int:
    if n_timesteps < cfg.window_len:
        return 0
    return (n_timesteps - cfg.window_len) // cfg.stride + 1


def window_starts(n_timesteps: int, cfg: WindowConfig) -> np.ndarray:
    return np.arange(window_count(n_timesteps, cfg), dtype=np.int64) * cfg.stride


def window_timestamps(first: float, steps: np.ndarray, hop_seconds: float) -> np.ndarray:
    """
    Timestamps of windows starting `steps` timesteps after a window at `first` seconds.

    Every producer and decoder of fingerprint timestamps goes through this formula, so
    timestamps rebuilt from a stored DB are bit-identical to freshly computed ones.
    """
    return first + np.asarray(steps, dtype=np.float64) * hop_seconds


def require_window(bands: BandSpectrogram, cfg: WindowConfig) -> None:
    if bands.n_timesteps < cfg.window_len:
        raise SignalTooShortError(
            f"Spectrogram has {bands.n_timesteps} timesteps, "
            f"shorter than one {cfg.window_len}-timestep window"
        )


def sliding_windows(bands: BandSpectrogram,
                    cfg: WindowConfig) -> List[Tuple[float, np.ndarray]]:
    """
    Split a band spectrogram into overlapping windows.

    Windows start at timesteps ``0, s, 2s, ...``; each item is ``(timestamp, view)`` where
    the view is ``[window_len][n_bands]`` and shares memory with `bands`.

    :raises SignalTooShortError: If the spectrogram is shorter than one window.
    """
    require_window(bands, cfg)
    starts = window_starts(bands.n_timesteps, cfg)
    timestamps = window_timestamps(0.0, starts, bands.hop_seconds)
    return [(float(ts), bands.frames[start:start + cfg.window_len])
            for ts, start in zip(timestamps, starts)]


def time_average(window: np.ndarray) -> np.ndarray:
    return np.asarray(window).mean(axis=0)


def window_means(bands: BandSpectrogram, cfg: WindowConfig) -> np.ndarray:
    """
    Per-band means of every window, ``[n_windows][n_bands]``.

    Each row is computed from its own window only, so identical audio windows produce
    identical means wherever they occur in a signal.
    """
    require_window(bands, cfg)
    views = sliding_window_view(bands.frames, cfg.window_len, axis=0)[::cfg.stride]
    return views.mean(axis=-1)


class RunningMean:
    """
    Incremental per-band window mean for streaming input.

    `advance` drops the oldest `stride` columns and adds `stride` new ones, keeping the
    running sum in float64.
    """

    def __init__(self, first_window: np.ndarray) -> None:
        first_window = np.asarray(first_window, dtype=np.float64)
        if first_window.ndim != 2 or first_window.shape[0] < 1:
            raise InvalidParameterError("Window must be a non-empty [time][band] array")
        self._columns = first_window.copy()
        self._sum = first_window.sum(axis=0)

    @property
    def window_len(self) -> int:
        return int(self._columns.shape[0])

    @property
    def mean(self) -> np.ndarray:
        return self._sum / self.window_len

    def advance(self, new_columns: np.ndarray) -> np.ndarray:
        new_columns = np.asarray(new_columns, dtype=np.float64)
        step = new_columns.shape[0]
        if not 1 <= step <= self.window_len:
            raise InvalidParameterError(
                f"Can advance by 1..{self.window_len} timesteps, got {step}"
            )
        self._sum += new_columns.sum(axis=0) - self._columns[:step].sum(axis=0)
        self._columns = np.concatenate([self._columns[step:], new_columns])
        return self.mean
