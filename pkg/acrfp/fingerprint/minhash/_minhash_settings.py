from dataclasses import dataclass

from .._settings import PipelineSettings
from ._minhash import MinHashParams

__all__ = ("MinHashSettings",)


@dataclass(frozen=True)
class MinHashSettings:
    top_t: int = 200
    seed: int = 0

    def make_params(self, pipeline: PipelineSettings) -> MinHashParams:
        """
        Draw permutations sized for the bit vectors `pipeline` produces.
        """
        n_bits = 2 * pipeline.window.window_len * pipeline.bark_bands
        return MinHashParams.generate(self.top_t, self.seed, n_bits)
