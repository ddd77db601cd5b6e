import logging
from dataclasses import dataclass

from ..core import InvalidParameterError
from ..refdb import ReferenceDB
from ._exhaustive_index import ExhaustiveIndex
from ._index import Index
from ._index_type import IndexType
from ._ivf_index import ivf_build

__all__ = ("IndexSettings", "build_index",)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexSettings:
    """
    How ``build-index`` and the experiments build indexes.

    ``nlist == 0`` and ``nprobe == 0`` derive the values from the DB size.
    """

    type: IndexType = IndexType.IVF
    nlist: int = 0
    nprobe: int = 0
    seed: int = 0
    kmeans_iterations: int = 25
    max_points_per_centroid: int = 256

    def __post_init__(self) -> None:
        if self.nlist < 0 or self.nprobe < 0:
            raise InvalidParameterError("nlist and nprobe must be >= 0")
        if self.kmeans_iterations < 1 or self.max_points_per_centroid < 1:
            raise InvalidParameterError("k-means needs >= 1 iteration and point per centroid")


def build_index(db: ReferenceDB, settings: IndexSettings) -> Index:
    """
    Build the index `settings` asks for over `db`.

    :raises KindMismatchError: For an IVF index over min-hash signatures.
    :raises EmptyDatabaseError: For an IVF index over an empty DB.
    """
    if settings.type is IndexType.EXHAUSTIVE:
        return ExhaustiveIndex(db)
    index = ivf_build(db, settings.nlist, seed=settings.seed, nprobe=settings.nprobe,
                      iterations=settings.kmeans_iterations,
                      max_points_per_centroid=settings.max_points_per_centroid)
    logger.debug("Built %r", index)
    return index
