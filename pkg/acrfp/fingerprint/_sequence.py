from dataclasses import dataclass
from typing import Iterator, Union, overload

import numpy as np

from ..core import InvalidParameterError
from ._kind import FingerprintKind

__all__ = ("ProposedFingerprint", "MinHashSignature", "FingerprintSequence",
           "Fingerprint", "SIGNATURE_SIZE", "PROPOSED_DIMS",)

SIGNATURE_SIZE = 72
PROPOSED_DIMS = 32


@dataclass(frozen=True, eq=False)
class ProposedFingerprint:
    values: np.ndarray
    timestamp: float

    def __post_init__(self) -> None:
        if not np.all(np.isfinite(self.values)):
            raise InvalidParameterError("Fingerprint values must be finite")


@dataclass(frozen=True, eq=False)
class MinHashSignature:
    values: np.ndarray
    timestamp: float

    def __post_init__(self) -> None:
        if self.values.shape != (SIGNATURE_SIZE,):
            raise InvalidParameterError(
                f"Min-hash signature must have {SIGNATURE_SIZE} bytes, got {self.values.shape}"
            )


Fingerprint = Union[ProposedFingerprint, MinHashSignature]


@dataclass(frozen=True, eq=False)
class FingerprintSequence:
    """
    Fingerprints of one kind in time order, stored column-wise.

    `values` is ``float16[n][32]`` for proposed fingerprints and ``uint8[n][72]`` for
    min-hash signatures; `timestamps` holds window start times in seconds.
    """

    values: np.ndarray
    timestamps: np.ndarray
    kind: FingerprintKind

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        timestamps = np.asarray(self.timestamps, dtype=np.float64)
        expected = np.float16 if self.kind is FingerprintKind.PROPOSED else np.uint8
        if values.ndim != 2 or values.dtype != expected:
            raise InvalidParameterError(
                f"{self.kind.value} fingerprints must be a 2-D {np.dtype(expected).name} "
                f"array, got {values.ndim}-D {values.dtype}"
            )
        if timestamps.shape != (values.shape[0],):
            raise InvalidParameterError(
                f"Got {values.shape[0]} fingerprints but {timestamps.size} timestamps"
            )
        if timestamps.size > 1 and not np.all(np.diff(timestamps) > 0):
            raise InvalidParameterError("Fingerprint timestamps must be strictly increasing")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "timestamps", timestamps)

    @classmethod
    def empty(cls, kind: FingerprintKind, dims: int) -> "FingerprintSequence":
        dtype = np.float16 if kind is FingerprintKind.PROPOSED else np.uint8
        return cls(np.zeros((0, dims), dtype=dtype), np.zeros(0), kind)

    @property
    def dims(self) -> int:
        return int(self.values.shape[1])

    @property
    def spacing(self) -> float:
        """
        Seconds between consecutive fingerprints (0.0 for fewer than two).
        """
        if len(self) < 2:
            return 0.0
        return float(self.timestamps[1] - self.timestamps[0])

    def skip(self, skip: int) -> "FingerprintSequence":
        """
        Keep indices ``0, skip + 1, 2 (skip + 1), ...``.
        """
        if skip < 0:
            raise InvalidParameterError(f"Skip must be >= 0, got {skip}")
        return self[::skip + 1]

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @overload
    def __getitem__(self, item: int) -> Fingerprint:
        pass

    @overload
    def __getitem__(self, item: slice) -> "FingerprintSequence":
        pass

    def __getitem__(self, item: Union[int, slice]) -> Union[Fingerprint, "FingerprintSequence"]:
        if isinstance(item, slice):
            return FingerprintSequence(self.values[item], self.timestamps[item], self.kind)
        timestamp = float(self.timestamps[item])
        if self.kind is FingerprintKind.PROPOSED:
            return ProposedFingerprint(self.values[item], timestamp)
        return MinHashSignature(self.values[item], timestamp)

    def __iter__(self) -> Iterator[Fingerprint]:
        for index in range(len(self)):
            yield self[index]

    def __repr__(self) -> str:
        return f"FingerprintSequence(kind={self.kind.value}, n={len(self)}, dims={self.dims})"
