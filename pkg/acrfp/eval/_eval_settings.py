from dataclasses import dataclass

from ..core import InvalidParameterError

__all__ = ("EvalSettings",)


@dataclass(frozen=True)
class EvalSettings:
    """
    Query construction and measurement parameters of the experiment suite.

    :ivar query_seconds: Length of each query excerpt cut from a corpus clip.
    :ivar queries_per_clip: Excerpts drawn per clip.
    :ivar noise_seg_len: Segment length of the artificial-noise protocol.
    :ivar skip_seg_len: Segment length of the skip and false-positive protocols.
    :ivar bench_queries: Smallest query batch timed by the speed experiment.
    :ivar bench_runs: Timed passes per speed measurement.
    :ivar false_positive_segments: White-noise segments matched by the false-positive check.
    :ivar temporal_clips: Corpus clips the temporal experiment analyses.
    """

    query_seconds: float = 8.0
    queries_per_clip: int = 1
    noise_seg_len: float = 1.0
    skip_seg_len: float = 1.25
    bench_queries: int = 1000
    bench_runs: int = 5
    false_positive_segments: int = 100
    temporal_clips: int = 10

    def __post_init__(self) -> None:
        if self.query_seconds <= 0 or self.noise_seg_len <= 0 or self.skip_seg_len <= 0:
            raise InvalidParameterError("Query and segment lengths must be > 0")
        if self.queries_per_clip < 1:
            raise InvalidParameterError(
                f"queries_per_clip must be >= 1, got {self.queries_per_clip}"
            )
        if self.bench_queries < 1 or self.bench_runs < 1:
            raise InvalidParameterError("Benchmarks need >= 1 query and >= 1 run")
        if self.false_positive_segments < 1 or self.temporal_clips < 1:
            raise InvalidParameterError("Need >= 1 false-positive segment and temporal clip")
