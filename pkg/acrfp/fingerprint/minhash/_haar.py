from functools import lru_cache

import numpy as np

from ...core import InvalidParameterError

__all__ = ("haar_matrix", "haar2d", "inverse_haar2d",)


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@lru_cache(maxsize=16)
def haar_matrix(n: int) -> np.ndarray:
    """
    Orthonormal ``n x n`` Haar analysis matrix for a full decomposition.

    Row 0 is the scaling (DC) function; ``H @ H.T`` is the identity.
    """
    if not _is_power_of_two(n):
        raise InvalidParameterError(f"Haar transform size must be a power of two, got {n}")
    h = np.ones((1, 1))
    while h.shape[0] < n:
        size = h.shape[0]
        averages = np.kron(h, [1.0, 1.0])
        details = np.kron(np.eye(size), [1.0, -1.0])
        h = np.vstack([averages, details]) / np.sqrt(2.0)
    h.setflags(write=False)
    return h


def _check(window: np.ndarray) -> np.ndarray:
    window = np.asarray(window, dtype=np.float64)
    if window.ndim < 2:
        raise InvalidParameterError("Haar transform expects a [W][B] window")
    rows, cols = window.shape[-2:]
    if not (_is_power_of_two(rows) and _is_power_of_two(cols)):
        raise InvalidParameterError(
            f"Haar window dimensions must be powers of two, got {rows}x{cols}"
        )
    return window


def haar2d(window: np.ndarray) -> np.ndarray:
    """
    Full 2-D orthonormal Haar transform of ``[..., W, B]`` windows.
    """
    window = _check(window)
    rows, cols = window.shape[-2:]
    return haar_matrix(rows) @ window @ haar_matrix(cols).T


def inverse_haar2d(coeffs: np.ndarray) -> np.ndarray:
    coeffs = _check(coeffs)
    rows, cols = coeffs.shape[-2:]
    return haar_matrix(rows).T @ coeffs @ haar_matrix(cols)
