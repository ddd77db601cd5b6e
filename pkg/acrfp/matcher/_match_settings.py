from dataclasses import dataclass

from niltype import Nil, Nilable

from ..core import InvalidParameterError
from ..fingerprint import FingerprintKind, PipelineSettings
from ._match_config import MatchConfig

__all__ = ("MatchSettings",)


@dataclass(frozen=True)
class MatchSettings:
    """
    Matching parameters independent of a particular DB.

    `config_for` turns them into the `MatchConfig` of one DB: the offset bucket defaults to
    the DB's fingerprint spacing and the distance gate depends on the fingerprint kind.
    A gate of ``0`` disables it.
    """

    top_k: int = 5
    offset_bin: float = 0.0
    majority_fraction: float = 0.4
    max_l2_distance: float = 8.0
    max_hamming: int = 64
    seg_len: float = 1.25
    seg_hop: float = 0.0

    def __post_init__(self) -> None:
        if self.offset_bin < 0:
            raise InvalidParameterError(f"offset_bin must be >= 0, got {self.offset_bin}")
        if self.max_l2_distance < 0 or self.max_hamming < 0:
            raise InvalidParameterError("Distance gates must be >= 0")
        if self.seg_len <= 0 or self.seg_hop < 0:
            raise InvalidParameterError(
                f"Segments need seg_len > 0 and seg_hop >= 0, got {self.seg_len}, {self.seg_hop}"
            )

    def max_distance(self, kind: FingerprintKind) -> Nilable[float]:
        gate = self.max_l2_distance if kind is FingerprintKind.PROPOSED else self.max_hamming
        return float(gate) if gate > 0 else Nil

    def config_for(self, kind: FingerprintKind, skip: int,
                   pipeline: PipelineSettings) -> MatchConfig:
        if self.offset_bin == 0:
            return MatchConfig.for_skip(skip, pipeline, top_k=self.top_k,
                                        majority_fraction=self.majority_fraction,
                                        max_distance=self.max_distance(kind))
        return MatchConfig(top_k=self.top_k, offset_bin=self.offset_bin,
                           majority_fraction=self.majority_fraction,
                           max_distance=self.max_distance(kind))

    @property
    def hop(self) -> float:
        """
        Seconds between segment starts; ``seg_hop == 0`` means back-to-back segments.
        """
        return self.seg_hop or self.seg_len
