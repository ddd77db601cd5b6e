import logging
import shutil
import subprocess
from pathlib import Path
from tempfile import TemporaryDirectory

import numpy as np

from ..audio import AudioBuffer, load_wav, save_wav
from ..core import DegradationError, TranscoderUnavailableError

__all__ = ("transcode_mp3", "find_transcoder",)

logger = logging.getLogger(__name__)


def find_transcoder(name: str) -> str:
    """
    Resolve the encoder binary on ``PATH`` (or as a path).

    :raises TranscoderUnavailableError: If it cannot be found.
    """
    path = shutil.which(name)
    if path is None:
        raise TranscoderUnavailableError(
            f"Transcoder '{name}' is not available; set Degrade.transcoder to an ffmpeg binary"
        )
    logger.debug("Using transcoder '%s'", path)
    return path


def _run(args: list) -> None:
    try:
        subprocess.run(args, check=True, capture_output=True)
    except subprocess.CalledProcessError as e:
        stderr = e.stderr.decode(errors="replace").strip()
        raise DegradationError(f"Transcoder failed ({e.returncode}): {stderr}") from None


def transcode_mp3(x: np.ndarray, rate: int, bitrate_kbps: float, transcoder: str) -> np.ndarray:
    """
    Round-trip `x` through an MP3 encoder at a fixed bitrate.

    The decoded signal is trimmed or zero-padded back to ``len(x)``.
    """
    binary = find_transcoder(transcoder)
    base = [binary, "-hide_banner", "-loglevel", "error", "-nostdin", "-y"]
    with TemporaryDirectory(prefix="acrfp-") as tmp:
        src, mp3, dst = Path(tmp) / "in.wav", Path(tmp) / "in.mp3", Path(tmp) / "out.wav"
        save_wav(src, AudioBuffer(x.astype(np.float32), rate), sample_format="int16")
        _run(base + ["-i", str(src), "-codec:a", "libmp3lame",
                     "-b:a", f"{int(round(bitrate_kbps))}k", str(mp3)])
        _run(base + ["-i", str(mp3), "-ac", "1", "-ar", str(rate),
                     "-codec:a", "pcm_s16le", str(dst)])
        decoded = load_wav(dst).samples
    if decoded.ndim != 1:
        decoded = decoded.mean(axis=1)
    if decoded.shape[0] < x.shape[0]:
        decoded = np.pad(decoded, (0, x.shape[0] - decoded.shape[0]))
    return decoded[:x.shape[0]].astype(np.float64)
