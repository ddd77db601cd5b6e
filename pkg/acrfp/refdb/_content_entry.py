from dataclasses import dataclass

import numpy as np

from ..core import InvalidParameterError
from ..fingerprint import FingerprintKind, FingerprintSequence

__all__ = ("ContentEntry",)


@dataclass(frozen=True, eq=False)
class ContentEntry:
    """
    Retained fingerprints of one reference content.
    """

    content_id: str
    fingerprints: FingerprintSequence

    def __post_init__(self) -> None:
        if not self.content_id:
            raise InvalidParameterError("Content id must be a non-empty string")

    @property
    def kind(self) -> FingerprintKind:
        return self.fingerprints.kind

    @property
    def timestamps(self) -> np.ndarray:
        return self.fingerprints.timestamps

    def __len__(self) -> int:
        return len(self.fingerprints)

    def __repr__(self) -> str:
        return f"ContentEntry({self.content_id!r}, n={len(self)})"
