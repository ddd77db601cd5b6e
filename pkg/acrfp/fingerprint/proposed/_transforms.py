import numpy as np

from ...core import HalfPrecisionOverflowError, InvalidParameterError

__all__ = ("standardize", "delta_augment", "cast_half", "STD_EPSILON",)

STD_EPSILON = 1e-8


def standardize(values: np.ndarray) -> np.ndarray:
    """
    Zero-mean, unit-variance scaling along the last axis using the population std.

    Rows whose std is below ``1e-8`` become all zeros, so silence still yields a valid
    fingerprint.

    :param values: ``[..., K]`` array with ``K >= 2``.
    :return: Standardized float64 array of the same shape.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.shape[-1] < 2:
        raise InvalidParameterError(f"Need at least 2 values to standardize, got {values.shape}")
    mean = values.mean(axis=-1, keepdims=True)
    std = values.std(axis=-1, keepdims=True)
    flat = std < STD_EPSILON
    scaled = (values - mean) / np.where(flat, 1.0, std)
    return np.where(flat, 0.0, scaled)


def delta_augment(mean_bands: np.ndarray) -> np.ndarray:
    """
    Append standardized neighbour-band deltas to the standardized band means.

    For ``N`` bands the result has ``2N - 1`` values:
    ``standardize(m) ++ standardize(m[1:] - m[:-1])``.
    """
    mean_bands = np.asarray(mean_bands, dtype=np.float64)
    if mean_bands.shape[-1] < 2:
        raise InvalidParameterError(f"Need at least 2 bands, got {mean_bands.shape[-1]}")
    deltas = np.diff(mean_bands, axis=-1)
    return np.concatenate([standardize(mean_bands), standardize(deltas)], axis=-1)


def cast_half(values: np.ndarray) -> np.ndarray:
    """
    Round to IEEE 754 binary16 (round-to-nearest-even).

    :raises HalfPrecisionOverflowError: If a value is not finite in half precision.
    """
    values = np.asarray(values)
    with np.errstate(over="ignore", invalid="ignore"):
        half = values.astype(np.float16)
    if not np.all(np.isfinite(half)):
        worst = float(np.max(np.abs(values[~np.isfinite(half)])))
        raise HalfPrecisionOverflowError(
            f"Value {worst} cannot be represented in half precision (limit 65504)"
        )
    return half
