import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from ...core import (
    BinaryReader,
    BinaryWriter,
    DimensionMismatchError,
    InsufficientSamplesError,
    InvalidParameterError,
    MagicMismatchError,
    VersionMismatchError,
    atomic_write_bytes,
    read_artifact,
)
from ._transforms import cast_half

__all__ = ("PcaModel", "pca_train", "pca_apply", "encode_pca", "decode_pca",
           "write_pca", "read_pca", "save_pca", "load_pca",
           "PCA_MAGIC", "PCA_VERSION",)

logger = logging.getLogger(__name__)

PCA_MAGIC = b"ACPC"
PCA_VERSION = 1
_RANK_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class PcaModel:
    """
    Linear projection from pre-fingerprints to the final fingerprint space.

    `components` rows are orthonormal and ordered by non-increasing explained variance.
    All arrays are float32, the precision they are stored at.
    """

    mean: np.ndarray
    components: np.ndarray
    explained_variance: np.ndarray
    trained_on: int

    def __post_init__(self) -> None:
        in_dims = self.mean.shape[0]
        if self.components.shape[1:] != (in_dims,):
            raise DimensionMismatchError(
                f"Components {self.components.shape} do not match mean of {in_dims} values"
            )
        if self.explained_variance.shape != (self.components.shape[0],):
            raise DimensionMismatchError("Explained variance must have one value per component")
        for array in (self.mean, self.components, self.explained_variance):
            array.setflags(write=False)

    @property
    def in_dims(self) -> int:
        return int(self.mean.shape[0])

    @property
    def out_dims(self) -> int:
        return int(self.components.shape[0])

    def same_as(self, other: "PcaModel") -> bool:
        return (self.trained_on == other.trained_on
                and np.array_equal(self.mean, other.mean)
                and np.array_equal(self.components, other.components)
                and np.array_equal(self.explained_variance, other.explained_variance))


def pca_train(samples: np.ndarray, seed: int = 0, *, n_components: int = 32,
              max_samples: int = 500_000, min_samples: int = 1000) -> PcaModel:
    """
    Fit a PCA model on pre-fingerprints.

    At most `max_samples` rows are used, drawn uniformly without replacement with `seed`.
    Each component is sign-normalized so its largest-magnitude element is positive. If the
    data has fewer than `n_components` directions with variance, the remaining components
    are an arbitrary orthonormal completion with zero explained variance.

    :param samples: ``[n][dims]`` pre-fingerprints (any float dtype).
    :param seed: Seed of the subsample draw.
    :return: The trained model.
    :raises InsufficientSamplesError: If fewer than `min_samples` rows are given.
    :raises InvalidParameterError: If `n_components` exceeds the input dimension.
    """
    samples = np.asarray(samples)
    if samples.ndim != 2 or samples.shape[0] < min_samples:
        raise InsufficientSamplesError(
            f"PCA needs at least {min_samples} samples, got "
            f"{samples.shape[0] if samples.ndim == 2 else 0}"
        )
    dims = samples.shape[1]
    if not 1 <= n_components <= dims:
        raise InvalidParameterError(
            f"Cannot keep {n_components} components of {dims}-dimensional data"
        )

    if samples.shape[0] > max_samples:
        rng = np.random.default_rng(seed)
        rows = np.sort(rng.choice(samples.shape[0], size=max_samples, replace=False))
        samples = samples[rows]

    data = samples.astype(np.float64)
    mean = data.mean(axis=0)
    centered = data - mean
    covariance = centered.T @ centered / data.shape[0]

    eigenvalues, eigenvectors = np.linalg.eigh(covariance)
    order = np.argsort(eigenvalues, kind="stable")[::-1]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    eigenvectors = eigenvectors[:, order]

    trace = eigenvalues.sum()
    rank = int(np.sum(eigenvalues > _RANK_TOLERANCE * max(trace, 1.0)))
    if rank < n_components:
        logger.warning("Pre-fingerprints span only %d of %d requested dimensions; "
                       "padding with zero-variance components", rank, n_components)
        eigenvalues[rank:] = 0.0

    components = eigenvectors[:, :n_components].T.copy()
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.where(components[np.arange(n_components), pivots] < 0, -1.0, 1.0)
    components *= signs[:, None]

    explained = eigenvalues[:n_components] / trace if trace > 0 else np.zeros(n_components)
    return PcaModel(mean=mean.astype(np.float32),
                    components=components.astype(np.float32),
                    explained_variance=explained.astype(np.float32),
                    trained_on=int(data.shape[0]))


def pca_apply(model: PcaModel, values: np.ndarray) -> np.ndarray:
    """
    Project pre-fingerprints and store the result at half precision.

    :param values: ``[in_dims]`` or ``[n][in_dims]``.
    :return: float16 array of shape ``[out_dims]`` or ``[n][out_dims]``.
    :raises DimensionMismatchError: If the last dimension is not ``model.in_dims``.
    """
    values = np.asarray(values)
    if values.shape[-1] != model.in_dims:
        raise DimensionMismatchError(
            f"PCA model expects {model.in_dims} values, got {values.shape[-1]}"
        )
    centered = values.astype(np.float64) - model.mean.astype(np.float64)
    return cast_half(centered @ model.components.astype(np.float64).T)


def write_pca(writer: BinaryWriter, model: PcaModel) -> None:
    writer.write_struct("4sHHHQ", PCA_MAGIC, PCA_VERSION, model.in_dims, model.out_dims,
                        model.trained_on)
    writer.write_array(model.mean, "f4")
    writer.write_array(model.components, "f4")
    writer.write_array(model.explained_variance, "f4")


def read_pca(reader: BinaryReader) -> PcaModel:
    magic, version, in_dims, out_dims, trained_on = reader.read_struct("4sHHHQ")
    if magic != PCA_MAGIC:
        raise MagicMismatchError(f"Expected a PCA model block, found magic {magic!r}")
    if version != PCA_VERSION:
        raise VersionMismatchError(f"PCA model version {version}, expected {PCA_VERSION}")
    mean = reader.read_array("f4", in_dims)
    components = reader.read_array("f4", out_dims * in_dims).reshape(out_dims, in_dims)
    explained = reader.read_array("f4", out_dims)
    return PcaModel(mean, components, explained, int(trained_on))


def encode_pca(model: PcaModel) -> bytes:
    writer = BinaryWriter()
    write_pca(writer, model)
    return writer.getvalue()


def decode_pca(data: bytes, *, name: str = "<buffer>") -> PcaModel:
    reader = BinaryReader(data, name=name)
    model = read_pca(reader)
    reader.expect_end()
    return model


def save_pca(path: Union[str, Path], model: PcaModel) -> None:
    atomic_write_bytes(Path(path), encode_pca(model))


def load_pca(path: Union[str, Path]) -> PcaModel:
    return decode_pca(read_artifact(path, "PCA model"), name=str(path))
