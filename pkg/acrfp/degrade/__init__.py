from ._apply import apply_noise, composite_shift
from ._loudness import k_weighting, measure_loudness, normalize_loudness
from ._noise_kind import NoiseKind
from ._noise_parser import NoiseParser, parse_noise
from ._noise_spec import RANDOM, NoiseParam, NoiseSpec
from ._settings import DegradeSettings
from ._suite import NOISE_SUITE, NOISE_SUITE_EXPRS, noise_suite
from ._time_stretch import wsola

__all__ = ("NoiseKind", "NoiseSpec", "NoiseParam", "RANDOM", "NoiseParser", "parse_noise",
           "DegradeSettings", "apply_noise", "composite_shift", "measure_loudness",
           "normalize_loudness", "k_weighting", "wsola", "NOISE_SUITE", "NOISE_SUITE_EXPRS",
           "noise_suite",)
