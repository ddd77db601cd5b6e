from typing import Tuple

from ._noise_parser import parse_noise
from ._noise_spec import NoiseSpec

__all__ = ("NOISE_SUITE", "NOISE_SUITE_EXPRS", "noise_suite",)

NOISE_SUITE_EXPRS: Tuple[str, ...] = (
    "freq_mask_5",
    "freq_mask_10",
    "freq_mask_20",
    "clipping_distortion_2",
    "clipping_distortion_10",
    "clipping_distortion_20",
    "clipping_distortion_40",
    "equalisation_3",
    "equalisation_6",
    "gaussian_noise_0.01",
    "gaussian_noise_0.02",
    "lossy_5_perc",
    "lossy_10_perc",
    "shifted_45",
    "shifted_90",
    "composite(5%, 0.01, 45)",
    "composite(10%, 0.02, 90)",
    "composite(10%, 0.02, random)",
    "loudness_norm_-14",
    "loudness_norm_-24",
    "preemphasis_0.9",
    "volume_-6db",
    "volume_6db",
    "wav_to_mp3_fixed_br_128",
    "wav_to_mp3_fixed_br_32",
    "time_stretch_0.9",
    "time_stretch_0.96",
    "time_stretch_1.04",
    "time_stretch_1.1",
)


def noise_suite(seed: int = 0) -> Tuple[NoiseSpec, ...]:
    return tuple(parse_noise(expr, seed) for expr in NOISE_SUITE_EXPRS)


NOISE_SUITE: Tuple[NoiseSpec, ...] = noise_suite()
