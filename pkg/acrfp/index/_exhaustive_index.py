from typing import Tuple

import numpy as np

from ..refdb import ReferenceDB
from ._distance import distances, top_k
from ._index import Index
from ._index_type import IndexType

__all__ = ("ExhaustiveIndex",)


class ExhaustiveIndex(Index):
    """
    Exact search: L2 over proposed fingerprints, byte Hamming over min-hash signatures.
    """

    def __init__(self, db: ReferenceDB) -> None:
        super().__init__(db)
        self._positions = np.arange(len(db), dtype=np.int64)

    @property
    def index_type(self) -> IndexType:
        return IndexType.EXHAUSTIVE

    def _search_one(self, query: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
        dist = distances(self.kind, self._db.widened(), query)
        return top_k(dist, self._positions, k)
