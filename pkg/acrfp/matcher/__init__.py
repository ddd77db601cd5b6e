from ._match import majority_threshold, match_segment, match_segments
from ._match_config import MatchConfig
from ._match_result import Candidate, MatchResult, MatchStatus
from ._match_settings import MatchSettings
from ._query_segment import QuerySegment
from ._segment import segment_count, segment_stream

__all__ = ("QuerySegment", "MatchConfig", "MatchSettings", "MatchStatus", "Candidate",
           "MatchResult", "match_segment", "match_segments", "majority_threshold",
           "segment_stream", "segment_count",)
