from dataclasses import dataclass

from niltype import Nil, Nilable

from ..core import InvalidParameterError
from ..fingerprint import PipelineSettings

__all__ = ("MatchConfig",)


@dataclass(frozen=True)
class MatchConfig:
    """
    Post-processing parameters turning per-fingerprint hits into a content decision.

    :ivar top_k: Neighbours retrieved per query fingerprint.
    :ivar offset_bin: Width of a time-offset bucket in seconds.
    :ivar majority_fraction: Share of the segment's fingerprints that must vote for the
                             winning bucket.
    :ivar max_distance: Neighbours farther than this cast no vote (Nil for no limit).
    :ivar candidates: Ranked buckets reported alongside the decision.
    """

    top_k: int = 5
    offset_bin: float = 0.128
    majority_fraction: float = 0.4
    max_distance: Nilable[float] = Nil
    candidates: int = 5

    def __post_init__(self) -> None:
        if self.top_k < 1:
            raise InvalidParameterError(f"top_k must be >= 1, got {self.top_k}")
        if not self.offset_bin > 0:
            raise InvalidParameterError(f"offset_bin must be > 0, got {self.offset_bin}")
        if not 0 < self.majority_fraction <= 1:
            raise InvalidParameterError(
                f"majority_fraction must be in (0, 1], got {self.majority_fraction}"
            )
        if self.max_distance is not Nil and self.max_distance < 0:  # type: ignore[operator]
            raise InvalidParameterError(f"max_distance must be >= 0, got {self.max_distance}")
        if self.candidates < 1:
            raise InvalidParameterError(f"candidates must be >= 1, got {self.candidates}")

    @classmethod
    def for_skip(cls, skip: int, settings: PipelineSettings, *, top_k: int = 5,
                 majority_fraction: float = 0.4,
                 max_distance: Nilable[float] = Nil) -> "MatchConfig":
        """
        Config whose offset bucket is one retained-fingerprint spacing of a skip-`skip` DB.
        """
        if skip < 0:
            raise InvalidParameterError(f"Skip must be >= 0, got {skip}")
        return cls(top_k=top_k, offset_bin=(skip + 1) * settings.stride_seconds,
                   majority_fraction=majority_fraction, max_distance=max_distance)
