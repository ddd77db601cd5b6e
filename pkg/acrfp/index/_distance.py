from typing import Tuple

import numpy as np

from ..fingerprint import FingerprintKind

__all__ = ("l2_squared", "hamming_counts", "distances", "top_k", "finalize",)


def l2_squared(vectors: np.ndarray, query: np.ndarray) -> np.ndarray:
    """
    Squared L2 distance from `query` to each row of `vectors`, in float32.

    Each row's result depends only on that row and the query, so scanning a subset of the
    rows yields exactly the same numbers as scanning all of them.
    """
    return np.square(vectors - query).sum(axis=1, dtype=np.float32)


def hamming_counts(signatures: np.ndarray, query: np.ndarray) -> np.ndarray:
    return np.count_nonzero(signatures != query, axis=1)


def distances(kind: FingerprintKind, vectors: np.ndarray, query: np.ndarray) -> np.ndarray:
    """
    Ranking distances: squared L2 for proposed fingerprints, byte Hamming for min-hash.
    """
    if kind is FingerprintKind.PROPOSED:
        return l2_squared(vectors, query)
    return hamming_counts(vectors, query)


def top_k(dist: np.ndarray, positions: np.ndarray, k: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    The `k` smallest distances, ties broken by ascending position.

    :return: ``(distances, positions)`` of at most `k` neighbours, nearest first.
    """
    if dist.shape[0] > k:
        kth = np.partition(dist, k - 1)[k - 1]
        keep = np.flatnonzero(dist <= kth)
    else:
        keep = np.arange(dist.shape[0])
    order = np.lexsort((positions[keep], dist[keep]))[:k]
    chosen = keep[order]
    return dist[chosen], positions[chosen]


def finalize(kind: FingerprintKind, dist: np.ndarray) -> np.ndarray:
    """
    Convert ranking distances to reported ones (the square root for L2).
    """
    if kind is FingerprintKind.PROPOSED:
        return np.sqrt(dist.astype(np.float64))
    return dist.astype(np.float64)
