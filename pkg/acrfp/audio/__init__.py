from ._audio_buffer import AudioBuffer
from ._canonicalize import (
    CANONICAL_RATE,
    KAISER_BETA,
    MIN_INPUT_RATE,
    TAPS_PER_PHASE,
    canonicalize,
    downmix,
    resample,
)
from ._wav import load_wav, save_wav

__all__ = ("AudioBuffer", "load_wav", "save_wav", "canonicalize", "downmix", "resample",
           "CANONICAL_RATE", "MIN_INPUT_RATE", "KAISER_BETA", "TAPS_PER_PHASE",)
