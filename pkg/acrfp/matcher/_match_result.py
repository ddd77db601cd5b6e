from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List

from niltype import Nil, Nilable

__all__ = ("MatchStatus", "Candidate", "MatchResult",)


class MatchStatus(Enum):
    MATCHED = "matched"
    """
    The winning offset bucket reached the majority threshold.
    """

    NO_MATCH = "no_match"
    """
    No bucket reached the threshold; the segment is treated as unknown audio.
    """


@dataclass(frozen=True)
class Candidate:
    """
    One (content, offset bucket) with its votes; `offset` is the mean raw offset in seconds.
    """

    content_id: str
    offset: float
    votes: int


@dataclass(frozen=True)
class MatchResult:
    status: MatchStatus
    threshold: int
    segment_start: float
    n_fingerprints: int
    candidates: List[Candidate] = field(default_factory=list)
    ground_truth: Nilable[str] = Nil

    @property
    def is_match(self) -> bool:
        return self.status is MatchStatus.MATCHED

    @property
    def content_id(self) -> Nilable[str]:
        return self.candidates[0].content_id if self.is_match else Nil

    @property
    def offset(self) -> Nilable[float]:
        """
        Reference time minus query time of the match, in seconds.
        """
        return self.candidates[0].offset if self.is_match else Nil

    @property
    def votes(self) -> int:
        return self.candidates[0].votes if self.candidates else 0

    @property
    def correct(self) -> bool:
        """
        Whether the decision names the ground-truth content (unmatched counts as wrong).
        """
        return self.is_match and self.ground_truth is not Nil \
            and self.content_id == self.ground_truth

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "segment_start": round(self.segment_start, 6),
            "n_fingerprints": self.n_fingerprints,
            "status": self.status.value,
            "content_id": None if self.content_id is Nil else self.content_id,
            "offset": None if self.offset is Nil else round(self.offset, 6),  # type: ignore
            "votes": self.votes,
            "threshold": self.threshold,
            "candidates": [
                {"content_id": c.content_id, "offset": round(c.offset, 6), "votes": c.votes}
                for c in self.candidates
            ],
        }
        if self.ground_truth is not Nil:
            result["ground_truth"] = self.ground_truth
        return result
