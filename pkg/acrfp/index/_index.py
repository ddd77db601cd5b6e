from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple, Union

import numpy as np

from ..core import (
    DimensionMismatchError,
    EmptyDatabaseError,
    InvalidParameterError,
    KindMismatchError,
)
from ..fingerprint import (
    Fingerprint,
    FingerprintKind,
    FingerprintSequence,
    MinHashSignature,
    ProposedFingerprint,
)
from ..refdb import ReferenceDB
from ._distance import finalize
from ._index_type import IndexType
from ._search_hit import SearchHit

__all__ = ("Index", "Query", "QueryBatch",)

Query = Union[np.ndarray, Fingerprint]
QueryBatch = Union[np.ndarray, FingerprintSequence]


class Index(ABC):
    """
    Nearest-neighbour search over the fingerprints of one `ReferenceDB`.

    Indexes are immutable once built; searches may run concurrently.
    """

    def __init__(self, db: ReferenceDB) -> None:
        self._db = db

    @property
    def db(self) -> ReferenceDB:
        return self._db

    @property
    def kind(self) -> FingerprintKind:
        return self._db.kind

    @property
    @abstractmethod
    def index_type(self) -> IndexType:
        pass

    @abstractmethod
    def _search_one(self, query: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Return ``(ranking distances, positions)`` of the `k` nearest DB fingerprints.
        """
        pass

    def search_raw(self, query: Query, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Search without building `SearchHit` objects.

        :return: ``(distances, positions)``, nearest first; distances as in `SearchHit`.
        """
        dist, positions = self._search_one(self._prepare(query), self._check_k(k))
        return finalize(self.kind, dist), positions

    def search(self, query: Query, k: int) -> List[SearchHit]:
        """
        Find the `k` nearest DB fingerprints to `query`.

        Hits are sorted by distance, ties by ``(content_id, timestamp)``. When the DB holds
        fewer than `k` fingerprints, all of them are returned.

        :raises KindMismatchError: If the query is of the other fingerprint kind.
        :raises DimensionMismatchError: If the query has the wrong number of values.
        :raises EmptyDatabaseError: If the DB holds no fingerprints.
        """
        dist, positions = self.search_raw(query, k)
        return self._hits(dist, positions)

    def search_batch_raw(self, queries: QueryBatch, k: int, *,
                         threads: int = 1) -> List[Tuple[np.ndarray, np.ndarray]]:
        """
        `search_raw` for every row of `queries`, optionally spread over `threads` workers.
        """
        rows = self.prepare_queries(queries)
        k = self._check_k(k)
        if threads > 1 and len(rows) > 1:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                raw = list(executor.map(lambda q: self._search_one(q, k), rows))
        else:
            raw = [self._search_one(q, k) for q in rows]
        return [(finalize(self.kind, d), p) for d, p in raw]

    def search_batch(self, queries: QueryBatch, k: int, *,
                     threads: int = 1) -> List[List[SearchHit]]:
        return [self._hits(d, p) for d, p in self.search_batch_raw(queries, k, threads=threads)]

    def _hits(self, dist: np.ndarray, positions: np.ndarray) -> List[SearchHit]:
        db = self._db
        return [SearchHit(db.content_id_at(p), float(db.timestamps[p]), float(d), int(p))
                for d, p in zip(dist, positions)]

    def _check_k(self, k: int) -> int:
        if k < 1:
            raise InvalidParameterError(f"k must be >= 1, got {k}")
        if len(self._db) == 0:
            raise EmptyDatabaseError("Cannot search an empty reference DB")
        return k

    def _prepare(self, query: Query) -> np.ndarray:
        if isinstance(query, (ProposedFingerprint, MinHashSignature)):
            query_kind = (FingerprintKind.PROPOSED if isinstance(query, ProposedFingerprint)
                          else FingerprintKind.MINHASH)
            self._check_kind(query_kind)
            values = query.values
        else:
            values = np.asarray(query)
        return self._convert(values.reshape(1, -1) if values.ndim == 1 else values)[0]

    def prepare_queries(self, queries: QueryBatch) -> np.ndarray:
        """
        Validate a query batch and convert it to the precision searches run at.
        """
        if isinstance(queries, FingerprintSequence):
            self._check_kind(queries.kind)
            values = queries.values
        else:
            values = np.asarray(queries)
        if values.ndim != 2:
            raise DimensionMismatchError(f"Query batch must be 2-D, got {values.ndim}-D")
        return self._convert(values)

    def _check_kind(self, kind: FingerprintKind) -> None:
        if kind is not self.kind:
            raise KindMismatchError(
                f"Cannot search {kind.value} fingerprints in a {self.kind.value} index"
            )

    def _convert(self, values: np.ndarray) -> np.ndarray:
        if values.shape[-1] != self._db.dims:
            raise DimensionMismatchError(
                f"Query has {values.shape[-1]} values, the index holds {self._db.dims}"
            )
        if self.kind is FingerprintKind.PROPOSED:
            if values.dtype == np.uint8:
                raise KindMismatchError("Cannot search min-hash signatures in a proposed index")
            return values.astype(np.float16).astype(np.float32)
        if values.dtype != np.uint8:
            raise KindMismatchError("Min-hash index expects uint8 signatures")
        return values

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._db!r})"
