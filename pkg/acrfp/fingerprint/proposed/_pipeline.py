from dataclasses import replace
from typing import Optional, Tuple

import numpy as np

from ...audio import AudioBuffer
from ...spectral import mel_project, stft
from .._kind import FingerprintKind
from .._sequence import FingerprintSequence
from .._settings import PipelineSettings
from .._window import WindowConfig, window_means, window_starts, window_timestamps
from ._pca import PcaModel, pca_apply
from ._transforms import cast_half, delta_augment

__all__ = ("pre_fingerprints", "fingerprint_proposed",)


def pre_fingerprints(audio: AudioBuffer,
                     settings: Optional[PipelineSettings] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    Run the proposed pipeline up to (and including) the half-precision cast.

    :param audio: Audio at any supported rate; it is canonicalized first.
    :param settings: Pipeline parameters, defaults if omitted.
    :return: ``(timestamps, values)`` with values ``float16[n][2 * mel_bands - 1]``.
    :raises SignalTooShortError: If the audio is shorter than one window.
    """
    settings = settings or PipelineSettings()
    canonical = settings.canonicalize(audio)
    spectrogram = stft(canonical, settings.frame_size, settings.hop)
    bands = mel_project(spectrogram, settings.mel_bands, settings.mel_f_lo, settings.mel_f_hi,
                        log_floor=settings.log_floor)
    means = window_means(bands, settings.window)
    starts = window_starts(bands.n_timesteps, settings.window)
    timestamps = window_timestamps(0.0, starts, bands.hop_seconds)
    return timestamps, cast_half(delta_augment(means))


def fingerprint_proposed(audio: AudioBuffer, model: PcaModel,
                         cfg: Optional[WindowConfig] = None, *,
                         settings: Optional[PipelineSettings] = None) -> FingerprintSequence:
    """
    Compute the 32-dimensional half-precision fingerprints of `audio`.

    One fingerprint per window, timestamped at the window start.

    :param audio: Audio at any supported rate.
    :param model: PCA model mapping pre-fingerprints to fingerprints.
    :param cfg: Window geometry; overrides the one in `settings` when given.
    :param settings: Pipeline parameters, defaults if omitted.
    """
    settings = settings or PipelineSettings()
    if cfg is not None and cfg != settings.window:
        settings = replace(settings, window=cfg)
    timestamps, values = pre_fingerprints(audio, settings)
    return FingerprintSequence(pca_apply(model, values.astype(np.float32)), timestamps,
                               FingerprintKind.PROPOSED)
