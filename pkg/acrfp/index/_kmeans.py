import logging
from typing import Tuple

import numpy as np

from ..core import InvalidParameterError

__all__ = ("kmeans", "kmeans_plus_plus", "assign",)

logger = logging.getLogger(__name__)

_ASSIGN_CHUNK = 4096


def assign(data: np.ndarray, centroids: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Nearest centroid of every row and the squared distance to it (ties to the lower index).
    """
    labels = np.empty(data.shape[0], dtype=np.int64)
    best = np.empty(data.shape[0], dtype=np.float64)
    c_norms = np.square(centroids).sum(axis=1)
    for start in range(0, data.shape[0], _ASSIGN_CHUNK):
        chunk = data[start:start + _ASSIGN_CHUNK]
        d2 = np.square(chunk).sum(axis=1)[:, None] - 2 * chunk @ centroids.T + c_norms
        np.maximum(d2, 0, out=d2)
        labels[start:start + _ASSIGN_CHUNK] = np.argmin(d2, axis=1)
        best[start:start + _ASSIGN_CHUNK] = d2[np.arange(chunk.shape[0]),
                                               labels[start:start + _ASSIGN_CHUNK]]
    return labels, best


def kmeans_plus_plus(data: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    n = data.shape[0]
    chosen = [int(rng.integers(n))]
    d2 = np.square(data - data[chosen[0]]).sum(axis=1)
    for _ in range(1, k):
        total = d2.sum()
        if total > 0:
            index = int(rng.choice(n, p=d2 / total))
        else:
            # every point coincides with a centroid already
            index = int(rng.integers(n))
        chosen.append(index)
        np.minimum(d2, np.square(data - data[index]).sum(axis=1), out=d2)
    return data[chosen].copy()


def kmeans(data: np.ndarray, k: int, seed: int = 0, *, iterations: int = 25,
           max_points_per_centroid: int = 256) -> np.ndarray:
    """
    Lloyd's k-means with k-means++ seeding, in float64.

    Training uses at most ``k * max_points_per_centroid`` rows drawn with `seed`. An empty
    cluster is re-seeded with the point of the largest cluster farthest from its centroid.
    The result depends only on the data and `seed`.

    :return: ``[k][dims]`` centroids.
    :raises InvalidParameterError: If there are fewer rows than `k`.
    """
    data = np.asarray(data, dtype=np.float64)
    n = data.shape[0]
    if not 1 <= k <= n:
        raise InvalidParameterError(f"Cannot form {k} clusters from {n} points")
    rng = np.random.default_rng(seed)
    limit = k * max_points_per_centroid
    if n > limit:
        data = data[np.sort(rng.choice(n, size=limit, replace=False))]

    centroids = kmeans_plus_plus(data, k, rng)
    for iteration in range(iterations):
        labels, d2 = assign(data, centroids)
        counts = np.bincount(labels, minlength=k)
        sums = np.zeros_like(centroids)
        np.add.at(sums, labels, data)

        updated = centroids.copy()
        filled = counts > 0
        updated[filled] = sums[filled] / counts[filled, None]
        for empty in np.flatnonzero(~filled):
            largest = int(np.argmax(counts))
            members = np.flatnonzero(labels == largest)
            farthest = int(members[np.argmax(d2[members])])
            logger.debug("k-means iteration %d: re-seeding empty cluster %d from cluster %d",
                         iteration, empty, largest)
            updated[empty] = data[farthest]
            labels[farthest], d2[farthest] = empty, 0.0
            counts[largest] -= 1
            counts[empty] = 1

        if np.array_equal(updated, centroids):
            break
        centroids = updated
    return centroids
