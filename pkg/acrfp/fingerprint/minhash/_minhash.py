from dataclasses import dataclass
from typing import Union

import numpy as np

from ...core import (
    BinaryReader,
    BinaryWriter,
    DimensionMismatchError,
    FormatError,
    InvalidParameterError,
)
from .._sequence import SIGNATURE_SIZE, MinHashSignature

__all__ = ("MinHashParams", "minhash", "hamming", "write_minhash_params",
           "read_minhash_params", "MINHASH_CAP",)

MINHASH_CAP = 255


@dataclass(frozen=True, eq=False)
class MinHashParams:
    """
    Seeded permutations of bit positions shared by reference and query signatures.

    ``permutations[k][position]`` is the rank of `position` under permutation ``k``.
    """

    top_t: int
    seed: int
    n_bits: int
    permutations: np.ndarray

    def __post_init__(self) -> None:
        perms = self.permutations
        if perms.shape != (SIGNATURE_SIZE, self.n_bits):
            raise InvalidParameterError(
                f"Expected {SIGNATURE_SIZE} permutations of {self.n_bits} positions, "
                f"got shape {perms.shape}"
            )
        expected = np.arange(self.n_bits)
        if not all(np.array_equal(np.sort(row), expected) for row in perms):
            raise InvalidParameterError("Min-hash permutations must be valid permutations")
        perms.setflags(write=False)

    @classmethod
    def generate(cls, top_t: int = 200, seed: int = 0,
                 n_bits: int = 2 * 64 * 32) -> "MinHashParams":
        """
        Draw the permutations with a seeded PCG64 generator (Fisher-Yates shuffles).

        :param top_t: Wavelets kept per window.
        :param seed: Permutation seed.
        :param n_bits: Bit-vector length, ``2 * W * B``.
        """
        if top_t < 1 or n_bits < 2 or top_t > n_bits // 2:
            raise InvalidParameterError(f"Invalid min-hash parameters top_t={top_t}, "
                                        f"n_bits={n_bits}")
        rng = np.random.default_rng(seed)
        permutations = np.stack([rng.permutation(n_bits) for _ in range(SIGNATURE_SIZE)])
        return cls(top_t, seed, n_bits, permutations.astype(np.uint32))

    def same_as(self, other: "MinHashParams") -> bool:
        return (self.top_t == other.top_t and self.seed == other.seed
                and self.n_bits == other.n_bits
                and np.array_equal(self.permutations, other.permutations))


def minhash(bits: np.ndarray, params: MinHashParams) -> np.ndarray:
    """
    Reduce bit vectors to 72-byte min-hash signatures.

    Byte ``k`` is the smallest rank of a set bit under permutation ``k``, capped at 255;
    an all-zero vector gives 72 x 255.

    :param bits: bool ``[n_bits]`` or ``[n][n_bits]``.
    :return: uint8 ``[72]`` or ``[n][72]``.
    :raises DimensionMismatchError: If the vector length is not ``params.n_bits``.
    """
    bits = np.asarray(bits, dtype=bool)
    if bits.shape[-1] != params.n_bits:
        raise DimensionMismatchError(
            f"Bit vectors must have {params.n_bits} positions, got {bits.shape[-1]}"
        )
    batch = bits.reshape(-1, params.n_bits)
    sentinel = np.uint32(np.iinfo(np.uint32).max)
    signatures = np.empty((batch.shape[0], SIGNATURE_SIZE), dtype=np.uint32)
    for k, permutation in enumerate(params.permutations):
        signatures[:, k] = np.where(batch, permutation, sentinel).min(axis=1)
    signatures = np.minimum(signatures, MINHASH_CAP).astype(np.uint8)
    return signatures.reshape(bits.shape[:-1] + (SIGNATURE_SIZE,))


SignatureLike = Union[MinHashSignature, np.ndarray]


def hamming(a: SignatureLike, b: SignatureLike) -> int:
    """
    Number of byte positions at which two signatures differ.

    :raises DimensionMismatchError: If the signatures differ in length.
    """
    left = a.values if isinstance(a, MinHashSignature) else np.asarray(a)
    right = b.values if isinstance(b, MinHashSignature) else np.asarray(b)
    if left.shape != right.shape:
        raise DimensionMismatchError(
            f"Cannot compare signatures of {left.shape} and {right.shape} bytes"
        )
    return int(np.count_nonzero(left != right))


def write_minhash_params(writer: BinaryWriter, params: MinHashParams) -> None:
    writer.write_struct("HQIH", params.top_t, params.seed, params.n_bits, SIGNATURE_SIZE)
    writer.write_array(params.permutations, "u4")


def read_minhash_params(reader: BinaryReader) -> MinHashParams:
    top_t, seed, n_bits, n_perms = reader.read_struct("HQIH")
    if n_perms != SIGNATURE_SIZE:
        raise FormatError(f"Stored {n_perms} min-hash permutations, expected {SIGNATURE_SIZE}")
    permutations = reader.read_array("u4", n_perms * n_bits).reshape(n_perms, n_bits)
    try:
        return MinHashParams(int(top_t), int(seed), int(n_bits), permutations)
    except InvalidParameterError as e:
        raise FormatError(f"Corrupt min-hash parameters: {e}") from None
