from dataclasses import replace
from typing import Optional

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ...audio import AudioBuffer
from ...core import DimensionMismatchError
from ...spectral import bark_project, stft
from .._kind import FingerprintKind
from .._sequence import FingerprintSequence
from .._settings import PipelineSettings
from .._window import WindowConfig, require_window, window_starts, window_timestamps
from ._bits import top_wavelet_bits
from ._haar import haar2d
from ._minhash import MinHashParams, minhash

__all__ = ("fingerprint_minhash",)

# windows per Haar/min-hash batch
_BATCH = 256


def fingerprint_minhash(audio: AudioBuffer, params: MinHashParams,
                        cfg: Optional[WindowConfig] = None, *,
                        settings: Optional[PipelineSettings] = None) -> FingerprintSequence:
    """
    Compute the 72-byte min-hash signatures of `audio`.

    Uses the same window geometry as the proposed pipeline over a bark spectrogram, so both
    kinds produce the same number of fingerprints at the same timestamps.

    :param audio: Audio at any supported rate.
    :param params: Permutations shared with the reference DB.
    :param cfg: Window geometry; overrides the one in `settings` when given.
    :param settings: Pipeline parameters, defaults if omitted.
    :raises SignalTooShortError: If the audio is shorter than one window.
    :raises DimensionMismatchError: If `params` was generated for another window size.
    """
    settings = settings or PipelineSettings()
    if cfg is not None and cfg != settings.window:
        settings = replace(settings, window=cfg)
    window = settings.window
    n_bits = 2 * window.window_len * settings.bark_bands
    if params.n_bits != n_bits:
        raise DimensionMismatchError(
            f"Min-hash parameters cover {params.n_bits} bits, "
            f"windows of {window.window_len}x{settings.bark_bands} need {n_bits}"
        )

    canonical = settings.canonicalize(audio)
    spectrogram = stft(canonical, settings.frame_size, settings.hop)
    bands = bark_project(spectrogram, settings.bark_bands, settings.bark_f_lo,
                         settings.bark_f_hi, log_floor=settings.log_floor)
    require_window(bands, window)

    # [n][bands][window_len] -> [n][window_len][bands]
    views = sliding_window_view(bands.frames, window.window_len, axis=0)[::window.stride]
    views = np.swapaxes(views, 1, 2)
    signatures = np.empty((views.shape[0], params.permutations.shape[0]), dtype=np.uint8)
    for start in range(0, views.shape[0], _BATCH):
        chunk = views[start:start + _BATCH]
        bits = top_wavelet_bits(haar2d(chunk), params.top_t)
        signatures[start:start + _BATCH] = minhash(bits, params)

    starts = window_starts(bands.n_timesteps, window)
    timestamps = window_timestamps(0.0, starts, bands.hop_seconds)
    return FingerprintSequence(signatures, timestamps, FingerprintKind.MINHASH)
