import numpy as np
from scipy.signal import correlate, get_window

from ..core import DegradationError, InvalidParameterError

__all__ = ("wsola",)


def wsola(x: np.ndarray, factor: float, rate: int, *, window_ms: float = 30.0,
          tolerance_ms: float = 10.0) -> np.ndarray:
    """
    Pitch-preserving time stretch by waveform-similarity overlap-add.

    Output frames are laid at half-window hops; each analysis frame starts within
    ``±tolerance_ms`` of its nominal position, at the offset whose waveform best continues
    the previously copied frame.

    :param x: Mono signal.
    :param factor: Speed factor; ``> 1`` shortens the signal, ``< 1`` lengthens it.
    :param rate: Sample rate of `x`.
    :return: ``round(len(x) / factor)`` samples.
    """
    if factor <= 0:
        raise InvalidParameterError(f"Stretch factor must be > 0, got {factor}")
    size = int(round(window_ms * rate / 1000))
    tolerance = int(round(tolerance_ms * rate / 1000))
    synthesis_hop = size // 2
    analysis_hop = synthesis_hop * factor
    out_len = int(round(x.shape[0] / factor))
    if out_len < 1:
        raise DegradationError(f"Stretching {x.shape[0]} samples by {factor} leaves nothing")

    n_frames = int(np.ceil(out_len / synthesis_hop)) + 1
    origin = size + tolerance
    # room for the last frame, its natural continuation and the search region
    tail = int(np.ceil(n_frames * analysis_hop)) + size + synthesis_hop + tolerance
    padded = np.pad(np.asarray(x, dtype=np.float64),
                    (origin, max(origin, tail - x.shape[0])))

    window = get_window("hann", size, fftbins=True)
    out = np.zeros(n_frames * synthesis_hop + size)
    weight = np.zeros_like(out)
    delta = 0
    for k in range(n_frames):
        start = origin + int(round(k * analysis_hop)) + delta
        dst = k * synthesis_hop
        out[dst:dst + size] += padded[start:start + size] * window
        weight[dst:dst + size] += window

        natural = padded[start + synthesis_hop:start + synthesis_hop + size]
        nominal = origin + int(round((k + 1) * analysis_hop))
        region = padded[nominal - tolerance:nominal + tolerance + size]
        delta = int(np.argmax(correlate(region, natural, mode="valid"))) - tolerance

    out /= np.where(weight > 1e-8, weight, 1.0)
    return out[:out_len]
