from dataclasses import dataclass

import numpy as np

from ._pca import PcaModel, pca_train

__all__ = ("PcaSettings",)


@dataclass(frozen=True)
class PcaSettings:
    dims: int = 32
    max_samples: int = 500_000
    min_samples: int = 1000
    seed: int = 0

    def train(self, samples: np.ndarray) -> PcaModel:
        return pca_train(samples, self.seed, n_components=self.dims,
                         max_samples=self.max_samples, min_samples=self.min_samples)
