from dataclasses import dataclass

from ..core import InvalidParameterError

__all__ = ("DegradeSettings",)


@dataclass(frozen=True)
class DegradeSettings:
    """
    Fixed parameters of the degradations that a noise expression does not carry.
    """

    sample_rate: int = 16000
    frame_size: int = 512
    hop: int = 256
    transcoder: str = "ffmpeg"
    wsola_window_ms: float = 30.0
    wsola_tolerance_ms: float = 10.0
    eq_bands: int = 5
    eq_band_hz: float = 400.0
    mask_band_hz: float = 40.0
    mask_iterations: int = 16

    def __post_init__(self) -> None:
        if self.eq_bands < 0 or self.eq_band_hz <= 0 or self.mask_band_hz <= 0:
            raise InvalidParameterError("Band counts must be >= 0 and band widths > 0")
        if self.mask_iterations < 1:
            raise InvalidParameterError(
                f"mask_iterations must be >= 1, got {self.mask_iterations}"
            )
        if not 0 < self.wsola_tolerance_ms < self.wsola_window_ms:
            raise InvalidParameterError("WSOLA needs 0 < tolerance < window")

    @property
    def nyquist(self) -> float:
        return self.sample_rate / 2
