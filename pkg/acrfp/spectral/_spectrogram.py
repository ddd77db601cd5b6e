from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..core import InvalidParameterError

__all__ = ("Spectrogram", "BandSpectrogram", "BandKind",)


class BandKind(Enum):
    MEL = "mel"
    BARK = "bark"


@dataclass(frozen=True, eq=False)
class Spectrogram:
    """
    STFT magnitudes ``[time][bin]`` with ``frame_size / 2 + 1`` bins per frame.
    """

    frames: np.ndarray
    frame_size: int
    hop: int
    sample_rate: int

    def __post_init__(self) -> None:
        if self.frames.ndim != 2 or self.frames.shape[1] != self.frame_size // 2 + 1:
            raise InvalidParameterError(
                f"Expected [time][{self.frame_size // 2 + 1}] magnitudes, "
                f"got shape {self.frames.shape}"
            )

    @property
    def n_frames(self) -> int:
        return int(self.frames.shape[0])

    @property
    def n_bins(self) -> int:
        return int(self.frames.shape[1])

    @property
    def hop_seconds(self) -> float:
        return self.hop / self.sample_rate

    def bin_frequencies(self) -> np.ndarray:
        return np.arange(self.n_bins) * (self.sample_rate / self.frame_size)


@dataclass(frozen=True, eq=False)
class BandSpectrogram:
    """
    Log-amplitude band energies ``[time][band]`` produced by a mel or bark filter bank.
    """

    frames: np.ndarray
    band_kind: BandKind
    n_bands: int
    hop_seconds: float

    def __post_init__(self) -> None:
        if self.frames.ndim != 2 or self.frames.shape[1] != self.n_bands:
            raise InvalidParameterError(
                f"Expected [time][{self.n_bands}] bands, got shape {self.frames.shape}"
            )

    @property
    def n_timesteps(self) -> int:
        return int(self.frames.shape[0])
