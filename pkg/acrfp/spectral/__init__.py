from ._filter_banks import (
    LOG_FLOOR,
    bark_filter_bank,
    bark_project,
    bark_to_hz,
    hz_to_bark,
    hz_to_mel,
    mel_filter_bank,
    mel_project,
    mel_to_hz,
)
from ._spectrogram import BandKind, BandSpectrogram, Spectrogram
from ._stft import frame_count, stft

__all__ = ("Spectrogram", "BandSpectrogram", "BandKind", "stft", "frame_count",
           "mel_project", "bark_project", "mel_filter_bank", "bark_filter_bank",
           "hz_to_mel", "mel_to_hz", "hz_to_bark", "bark_to_hz", "LOG_FLOOR",)
