import numpy as np

from ...core import InvalidParameterError

__all__ = ("top_wavelet_bits",)


def top_wavelet_bits(coeffs: np.ndarray, top_t: int) -> np.ndarray:
    """
    Encode the signs of the `top_t` largest-magnitude coefficients as a bit vector.

    Coefficient ``i`` owns bits ``2i`` and ``2i + 1``: ``01`` when it is among the top and
    positive, ``10`` when among the top and negative, ``00`` otherwise. Ties in magnitude
    go to the lower flat index; exact zeros never count as top coefficients.

    :param coeffs: ``[W][B]`` coefficients, or ``[n][W][B]`` for a batch.
    :param top_t: Number of coefficients to keep, at most ``W * B``.
    :return: bool array ``[2 * W * B]`` (or ``[n][2 * W * B]``).
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    batched = coeffs.ndim == 3
    flat = coeffs.reshape(coeffs.shape[0] if batched else 1, -1)
    size = flat.shape[1]
    if not 0 <= top_t <= size:
        raise InvalidParameterError(f"top_t must be in [0, {size}], got {top_t}")

    order = np.argsort(-np.abs(flat), axis=1, kind="stable")[:, :top_t]
    chosen = np.take_along_axis(flat, order, axis=1)
    rows = np.broadcast_to(np.arange(flat.shape[0])[:, None], order.shape)

    bits = np.zeros((flat.shape[0], 2 * size), dtype=bool)
    positive, negative = chosen > 0, chosen < 0
    bits[rows[positive], 2 * order[positive] + 1] = True
    bits[rows[negative], 2 * order[negative]] = True
    return bits if batched else bits[0]
