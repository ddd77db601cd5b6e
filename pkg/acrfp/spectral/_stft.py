import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from scipy import fft
from scipy.signal import get_window

from ..audio import AudioBuffer
from ..core import InvalidParameterError, SignalTooShortError
from ._spectrogram import Spectrogram

__all__ = ("stft", "frame_count",)


def frame_count(n_samples: int, frame_size: int, hop: int) -> int:
    return (n_samples - frame_size) // hop + 1


def stft(audio: AudioBuffer, frame_size: int = 512, hop: int = 256) -> Spectrogram:
    """
    Magnitude short-time Fourier transform with a periodic Hann window.

    Frame ``t`` covers samples ``[t * hop, t * hop + frame_size)``. There is no padding,
    so a partial trailing frame is dropped.

    :param audio: Mono audio.
    :param frame_size: Power-of-two frame length in samples.
    :param hop: Frame advance, ``0 < hop <= frame_size``.
    :return: Magnitude spectrogram with ``frame_size / 2 + 1`` bins.
    :raises InvalidParameterError: For invalid frame parameters or multichannel audio.
    :raises SignalTooShortError: If the audio is shorter than one frame.
    """
    if frame_size < 2 or frame_size & (frame_size - 1):
        raise InvalidParameterError(f"Frame size must be a power of two, got {frame_size}")
    if not 0 < hop <= frame_size:
        raise InvalidParameterError(f"Hop must be in (0, {frame_size}], got {hop}")
    if not audio.is_mono():
        raise InvalidParameterError("STFT expects mono audio, canonicalize it first")
    if audio.n_frames < frame_size:
        raise SignalTooShortError(
            f"Audio has {audio.n_frames} samples, shorter than one {frame_size}-sample frame"
        )

    samples = audio.samples.astype(np.float64)
    frames = sliding_window_view(samples, frame_size)[::hop]
    window = get_window("hann", frame_size, fftbins=True)
    magnitudes = np.abs(fft.rfft(frames * window, axis=1))
    return Spectrogram(magnitudes, frame_size, hop, audio.sample_rate)
