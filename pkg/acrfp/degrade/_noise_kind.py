from enum import Enum

__all__ = ("NoiseKind",)


class NoiseKind(Enum):
    """
    Audio degradations applied to queries before matching.
    """

    CLEAN = "clean"
    """
    Identity; the undistorted baseline.
    """

    FREQ_MASK = "freq_mask"
    """
    Zero X randomly chosen, disjoint 40 Hz frequency bands.
    """

    CLIPPING = "clipping"
    """
    Clamp amplitudes to the X/2-th and (100 - X/2)-th percentiles.
    """

    EQUALISATION = "equalisation"
    """
    Boost and cut a few random frequency bands by X dB.
    """

    GAUSSIAN = "gaussian"
    """
    Add white Gaussian noise with standard deviation X.
    """

    LOSSY = "lossy"
    """
    Zero X percent of the samples.
    """

    SHIFTED = "shifted"
    """
    Drop the first X samples, moving every STFT frame boundary.
    """

    COMPOSITE = "composite"
    """
    Lossy, then Gaussian, then shifted noise.
    """

    LOUDNESS_NORM = "loudness_norm"
    """
    Constant gain to reach a loudness of X LUFS.
    """

    PREEMPHASIS = "preemphasis"
    """
    First-order filter ``y[t] = x[t] - X x[t - 1]``.
    """

    TIME_STRETCH = "time_stretch"
    """
    Pitch-preserving speed change by a factor of X.
    """

    VOLUME = "volume"
    """
    Gain of X dB, clipped to [-1, 1].
    """

    TRANSCODE = "transcode"
    """
    MP3 round trip at X kbit/s through an external encoder.
    """
