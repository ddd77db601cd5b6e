from dataclasses import asdict, dataclass, fields
from typing import Any, Dict, Tuple, Type

__all__ = ("RowMeta", "AccuracyRow", "TemporalRow", "SpeedRow", "CellRow", "Row", "row_fields",)


@dataclass(frozen=True)
class RowMeta:
    """
    Provenance attached to every report row.
    """

    seed: int
    config_hash: str
    version: str


@dataclass(frozen=True)
class Row:
    def to_dict(self) -> Dict[str, Any]:
        result = {}
        for name, value in asdict(self).items():
            if isinstance(value, dict):
                result.update(value)
            elif isinstance(value, float):
                result[name] = round(value, 6)
            else:
                result[name] = value
        return result


def row_fields(row_type: Type[Row]) -> Tuple[str, ...]:
    names = []
    for f in fields(row_type):
        if f.name == "meta":
            names.extend(m.name for m in fields(RowMeta))
        else:
            names.append(f.name)
    return tuple(names)


@dataclass(frozen=True)
class AccuracyRow(Row):
    """
    Outcome of one accuracy cell.

    Every segment is exactly one of correct, incorrect (matched to another content) or
    no-match; unmatched segments count against accuracy. In the false-positive check no
    segment has a true content: `accuracy` there is the share of rejected segments.
    """

    experiment: str
    kind: str
    condition: str
    skip: int
    index: str
    accuracy: float
    false_positive: float
    correct: int
    incorrect: int
    no_match: int
    n_segments: int
    meta: RowMeta

    def __post_init__(self) -> None:
        if self.n_segments <= 0:
            raise ValueError("An accuracy row needs at least one segment")
        if self.correct + self.incorrect + self.no_match != self.n_segments:
            raise ValueError("Segment outcomes must add up to n_segments")


@dataclass(frozen=True)
class TemporalRow(Row):
    content_id: str
    kind: str
    n_fingerprints: int
    lag_1: float
    lag_8: float
    lag_32: float
    matrix: str
    meta: RowMeta


@dataclass(frozen=True)
class SpeedRow(Row):
    kind: str
    index: str
    skip: int
    db_fingerprints: int
    fps: float
    build_seconds: float
    db_bytes: int
    index_bytes: int
    n_queries: int
    threads: int
    meta: RowMeta


@dataclass(frozen=True)
class CellRow(Row):
    """
    Status of one experiment cell; skipped and failed cells only appear here.
    """

    experiment: str
    cell: str
    status: str
    elapsed: float
    reason: str
