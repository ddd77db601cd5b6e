import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..core import EmptyDatabaseError, InvalidParameterError, KindMismatchError
from ..fingerprint import FingerprintKind
from ..refdb import ReferenceDB
from ._distance import l2_squared, top_k
from ._index import Index, Query
from ._index_type import IndexType
from ._kmeans import assign, kmeans

__all__ = ("IvfIndex", "ivf_build", "default_nlist", "default_nprobe",)

logger = logging.getLogger(__name__)

MIN_NLIST = 16
MAX_NLIST = 65536


def default_nlist(n_vectors: int) -> int:
    """
    ``round(sqrt(N))`` clamped to ``[16, 65536]`` and to `n_vectors`.
    """
    nlist = int(round(np.sqrt(n_vectors)))
    return max(1, min(max(MIN_NLIST, min(nlist, MAX_NLIST)), n_vectors))


def default_nprobe(nlist: int) -> int:
    return max(1, nlist // 16)


class IvfIndex(Index):
    """
    Inverted-file index over proposed fingerprints.

    Every DB fingerprint sits in the list of its nearest centroid. A search ranks the
    centroids, scans the lists of the `nprobe` nearest ones and returns the exact top-k
    among them, with the same distance and tie-break as `ExhaustiveIndex`; probing every
    list therefore gives exactly the exhaustive result.
    """

    def __init__(self, db: ReferenceDB, centroids: np.ndarray,
                 lists: Sequence[np.ndarray], nprobe: int, seed: int = 0) -> None:
        super().__init__(db)
        if db.kind is not FingerprintKind.PROPOSED:
            raise KindMismatchError("IVF indexes hold proposed fingerprints only")
        centroids = np.asarray(centroids, dtype=np.float32)
        if centroids.ndim != 2 or centroids.shape[1] != db.dims:
            raise InvalidParameterError(
                f"Centroids must be [nlist][{db.dims}], got {centroids.shape}"
            )
        if len(lists) != centroids.shape[0]:
            raise InvalidParameterError(
                f"Got {len(lists)} inverted lists for {centroids.shape[0]} centroids"
            )
        self._centroids = centroids
        self._centroids.setflags(write=False)
        self._lists = [np.asarray(p, dtype=np.int64) for p in lists]
        self._check_partition()
        widened = db.widened()
        self._list_vectors = [widened[p] for p in self._lists]
        self._seed = seed
        self._nprobe = self._check_nprobe(nprobe)

    @property
    def index_type(self) -> IndexType:
        return IndexType.IVF

    @property
    def nlist(self) -> int:
        return int(self._centroids.shape[0])

    @property
    def nprobe(self) -> int:
        return self._nprobe

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def centroids(self) -> np.ndarray:
        return self._centroids

    @property
    def lists(self) -> List[np.ndarray]:
        return list(self._lists)

    def with_nprobe(self, nprobe: int) -> "IvfIndex":
        """
        A view of the same lists searched with another `nprobe`.
        """
        return IvfIndex(self._db, self._centroids, self._lists, nprobe, self._seed)

    def probe_order(self, query: Query) -> np.ndarray:
        """
        All list numbers, nearest centroid first (ties to the lower list number).
        """
        return self._probe_order(self._prepare(query))

    def _probe_order(self, query: np.ndarray) -> np.ndarray:
        dist = l2_squared(self._centroids, query)
        return np.lexsort((np.arange(self.nlist), dist))

    def _search_one(self, query: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
        probed = self._probe_order(query)[:self._nprobe]
        positions = np.concatenate([self._lists[i] for i in probed])
        if positions.size == 0:
            return np.zeros(0, dtype=np.float32), positions
        vectors = np.concatenate([self._list_vectors[i] for i in probed])
        return top_k(l2_squared(vectors, query), positions, k)

    def _check_nprobe(self, nprobe: int) -> int:
        if not 1 <= nprobe <= self.nlist:
            raise InvalidParameterError(f"nprobe must be in [1, {self.nlist}], got {nprobe}")
        return nprobe

    def _check_partition(self) -> None:
        total = sum(p.size for p in self._lists)
        if total != len(self._db):
            raise InvalidParameterError(
                f"Inverted lists hold {total} vectors, the DB has {len(self._db)}"
            )
        if total:
            seen = np.zeros(total, dtype=bool)
            for positions in self._lists:
                if positions.size and (positions.min() < 0 or positions.max() >= total):
                    raise InvalidParameterError("Inverted list position outside the DB")
                seen[positions] = True
            if not seen.all():
                raise InvalidParameterError("Inverted lists do not partition the DB")

    def __repr__(self) -> str:
        return f"IvfIndex(nlist={self.nlist}, nprobe={self.nprobe}, db={self._db!r})"


def ivf_build(db: ReferenceDB, nlist: int = 0, *, seed: int = 0, nprobe: int = 0,
              iterations: int = 25, max_points_per_centroid: int = 256) -> IvfIndex:
    """
    Cluster the DB's proposed fingerprints into `nlist` inverted lists.

    :param db: A proposed-fingerprint DB.
    :param nlist: Number of lists, ``0`` for `default_nlist`.
    :param seed: k-means seed; the same seed rebuilds identical centroids.
    :param nprobe: Default lists probed per query, ``0`` for `default_nprobe`.
    :param iterations: Maximum Lloyd iterations.
    :param max_points_per_centroid: Training sample cap per centroid.
    :raises KindMismatchError: For a min-hash DB.
    :raises EmptyDatabaseError: If the DB holds no fingerprints.
    :raises InvalidParameterError: If the DB holds fewer fingerprints than `nlist`.
    """
    if db.kind is not FingerprintKind.PROPOSED:
        raise KindMismatchError("IVF indexes hold proposed fingerprints only")
    n = len(db)
    if n == 0:
        raise EmptyDatabaseError("Cannot build an index over an empty reference DB")
    nlist = nlist or default_nlist(n)
    if nlist > n:
        raise InvalidParameterError(f"DB has {n} fingerprints, fewer than nlist={nlist}")

    data = db.widened().astype(np.float64)
    centroids = kmeans(data, nlist, seed, iterations=iterations,
                       max_points_per_centroid=max_points_per_centroid).astype(np.float32)
    labels, _ = assign(data, centroids.astype(np.float64))
    order = np.argsort(labels, kind="stable")
    bounds = np.searchsorted(labels[order], np.arange(nlist + 1))
    lists = [order[bounds[i]:bounds[i + 1]] for i in range(nlist)]

    empty = sum(1 for p in lists if p.size == 0)
    if empty:
        logger.debug("IVF build left %d of %d lists empty", empty, nlist)
    return IvfIndex(db, centroids, lists, nprobe or default_nprobe(nlist), seed)
