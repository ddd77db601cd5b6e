from dataclasses import dataclass, field

from ..audio import AudioBuffer, canonicalize
from ._window import WindowConfig

__all__ = ("PipelineSettings",)


@dataclass(frozen=True)
class PipelineSettings:
    """
    Every parameter that shapes a fingerprint, shared by both pipelines.

    A reference DB stores a snapshot of these settings so queries are always fingerprinted
    the same way as the references.
    """

    sample_rate: int = 16000
    min_input_rate: int = 8000
    kaiser_beta: float = 8.6
    taps_per_phase: int = 64
    frame_size: int = 512
    hop: int = 256
    mel_bands: int = 64
    mel_f_lo: float = 62.5
    mel_f_hi: float = 8000.0
    bark_bands: int = 32
    bark_f_lo: float = 0.0
    bark_f_hi: float = 8000.0
    log_floor: float = 1e-10
    window: WindowConfig = field(default_factory=WindowConfig)

    @property
    def hop_seconds(self) -> float:
        return self.hop / self.sample_rate

    @property
    def stride_seconds(self) -> float:
        return self.window.stride * self.hop_seconds

    @property
    def stride_samples(self) -> int:
        return self.window.stride * self.hop

    @property
    def window_samples(self) -> int:
        """
        Audio samples spanned by one fingerprint window.
        """
        return (self.window.window_len - 1) * self.hop + self.frame_size

    def canonicalize(self, audio: AudioBuffer) -> AudioBuffer:
        return canonicalize(audio, target_rate=self.sample_rate,
                            min_rate=self.min_input_rate,
                            taps_per_phase=self.taps_per_phase,
                            kaiser_beta=self.kaiser_beta)
