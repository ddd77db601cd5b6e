from dataclasses import dataclass

import numpy as np
from niltype import Nil, Nilable

from ..core import InvalidParameterError
from ..fingerprint import FingerprintKind, FingerprintSequence

__all__ = ("QuerySegment",)

_SPACING_TOLERANCE = 1e-6


@dataclass(frozen=True, eq=False)
class QuerySegment:
    """
    Consecutive query fingerprints matched together, on the query's own clock.

    `ground_truth` names the content the segment was cut from, for evaluation only.
    """

    fingerprints: FingerprintSequence
    ground_truth: Nilable[str] = Nil

    def __post_init__(self) -> None:
        timestamps = self.fingerprints.timestamps
        if timestamps.size > 2:
            steps = np.diff(timestamps)
            if np.ptp(steps) > _SPACING_TOLERANCE:
                raise InvalidParameterError("Query segment fingerprints must be evenly spaced")

    @property
    def kind(self) -> FingerprintKind:
        return self.fingerprints.kind

    @property
    def start(self) -> float:
        return float(self.fingerprints.timestamps[0]) if len(self) else 0.0

    def __len__(self) -> int:
        return len(self.fingerprints)

    def __repr__(self) -> str:
        truth = "" if self.ground_truth is Nil else f", ground_truth={self.ground_truth!r}"
        return f"QuerySegment(start={self.start:.3f}, n={len(self)}{truth})"
