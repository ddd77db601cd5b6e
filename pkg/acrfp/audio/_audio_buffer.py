from dataclasses import dataclass

import numpy as np

from ..core import EmptyAudioError, InvalidParameterError

__all__ = ("AudioBuffer",)


@dataclass(frozen=True, eq=False)
class AudioBuffer:
    """
    Floating-point audio with its sample rate.

    `samples` is 1-D for mono or ``[frames][channels]`` for multichannel input; the
    fingerprint pipelines only ever see canonical buffers (mono, 16 kHz, float32).
    """

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples)
        if samples.ndim not in (1, 2):
            raise InvalidParameterError(f"Audio samples must be 1-D or 2-D, got {samples.ndim}-D")
        if samples.shape[0] < 1 or samples.size == 0:
            raise EmptyAudioError("Audio must contain at least one sample")
        if int(self.sample_rate) <= 0:
            raise InvalidParameterError(f"Sample rate must be positive, got {self.sample_rate}")
        if not np.issubdtype(samples.dtype, np.floating):
            samples = samples.astype(np.float32)
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    @property
    def channels(self) -> int:
        return 1 if self.samples.ndim == 1 else int(self.samples.shape[1])

    @property
    def n_frames(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration(self) -> float:
        return self.n_frames / self.sample_rate

    def is_mono(self) -> bool:
        return self.samples.ndim == 1

    def excerpt(self, start: int, length: int) -> "AudioBuffer":
        """
        Return frames ``[start, start + length)``, clamped to the buffer end.
        """
        if start < 0 or start >= self.n_frames:
            raise InvalidParameterError(f"Excerpt start {start} is outside the buffer")
        return AudioBuffer(self.samples[start:start + length], self.sample_rate)

    def __len__(self) -> int:
        return self.n_frames

    def __repr__(self) -> str:
        return (f"AudioBuffer(frames={self.n_frames}, channels={self.channels}, "
                f"sample_rate={self.sample_rate})")
