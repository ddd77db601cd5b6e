import io
import logging
import struct
from pathlib import Path
from typing import Union

import numpy as np
from scipy.io import wavfile

from ..core import (
    AudioDecodeError,
    EmptyAudioError,
    InvalidParameterError,
    UnsupportedEncodingError,
    atomic_write_bytes,
)
from ._audio_buffer import AudioBuffer

__all__ = ("load_wav", "save_wav",)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_wav(path: PathLike) -> AudioBuffer:
    """
    Decode a PCM WAV file into an `AudioBuffer` scaled to ``[-1, 1]``.

    Supported encodings: 8-bit unsigned, 16/24/32-bit signed integer and 32/64-bit float,
    with one or two channels. Channel layout and sample rate are kept as stored.

    :param path: Path to the WAV file.
    :return: The decoded audio.
    :raises AudioDecodeError: If the file is missing or not a readable RIFF/WAVE file.
    :raises UnsupportedEncodingError: For other sample formats or more than two channels.
    :raises EmptyAudioError: If the file holds no samples.
    """
    try:
        rate, data = wavfile.read(str(path), mmap=False)
    except FileNotFoundError:
        raise AudioDecodeError(f"Audio file '{path}' does not exist") from None
    except (ValueError, OSError, EOFError, struct.error) as e:
        message = str(e).lower()
        if "unknown wave file format" in message or "unsupported" in message:
            raise UnsupportedEncodingError(f"Unsupported WAV encoding in '{path}': {e}") from None
        raise AudioDecodeError(f"Failed to decode '{path}': {e}") from None

    if data.size == 0:
        raise EmptyAudioError(f"Audio file '{path}' contains no samples")
    if data.ndim == 2 and data.shape[1] > 2:
        raise UnsupportedEncodingError(
            f"'{path}' has {data.shape[1]} channels, only mono and stereo are supported"
        )

    samples = _to_float(data, path)
    logger.debug("Decoded '%s': %d frames at %d Hz", path, samples.shape[0], rate)
    return AudioBuffer(samples, int(rate))


def _to_float(data: np.ndarray, path: PathLike) -> np.ndarray:
    if data.dtype == np.uint8:
        return ((data.astype(np.float32) - 128.0) / 128.0).astype(np.float32)
    if data.dtype == np.int16:
        return (data.astype(np.float32) / 32768.0).astype(np.float32)
    if data.dtype == np.int32:
        # 24-bit files are decoded left-justified into int32
        return (data.astype(np.float64) / 2.0 ** 31).astype(np.float32)
    if data.dtype in (np.float32, np.float64):
        return data.astype(np.float32)
    raise UnsupportedEncodingError(f"Unsupported WAV sample type {data.dtype} in '{path}'")


def save_wav(path: PathLike, audio: AudioBuffer, *, sample_format: str = "float32") -> None:
    """
    Write `audio` as a WAV file.

    :param path: Destination path; written atomically.
    :param audio: Audio to store.
    :param sample_format: ``"float32"`` keeps samples bit-exact, ``"int16"`` clips and
        quantizes them.
    :raises InvalidParameterError: For an unknown `sample_format`.
    """
    if sample_format == "float32":
        data = audio.samples.astype(np.float32)
    elif sample_format == "int16":
        clipped = np.clip(audio.samples, -1.0, 32767.0 / 32768.0)
        data = np.round(clipped * 32768.0).astype(np.int16)
    else:
        raise InvalidParameterError(f"Unknown WAV sample format '{sample_format}'")

    buffer = io.BytesIO()
    wavfile.write(buffer, audio.sample_rate, data)
    atomic_write_bytes(Path(path), buffer.getvalue())
