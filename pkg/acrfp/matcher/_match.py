import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Sequence, Tuple

import numpy as np
from niltype import Nil

from ..core import InvalidParameterError
from ..index import Index
from ._match_config import MatchConfig
from ._match_result import Candidate, MatchResult, MatchStatus
from ._query_segment import QuerySegment

__all__ = ("match_segment", "match_segments", "majority_threshold",)

_THRESHOLD_EPSILON = 1e-9

# (content index, offset bucket)
Bucket = Tuple[int, int]
# (distance, raw offset)
Hit = Tuple[float, float]


def majority_threshold(n_fingerprints: int, fraction: float) -> int:
    return max(1, math.ceil(fraction * n_fingerprints - _THRESHOLD_EPSILON))


def _collect_hits(segment: QuerySegment, index: Index,
                  cfg: MatchConfig) -> Dict[Bucket, Dict[int, Hit]]:
    """
    Closest hit of every query fingerprint in every bucket it votes for.
    """
    db = index.db
    results = index.search_batch_raw(segment.fingerprints, cfg.top_k)
    query_ts = segment.fingerprints.timestamps

    hits: Dict[Bucket, Dict[int, Hit]] = {}
    for row, (q_ts, (dist, positions)) in enumerate(zip(query_ts, results)):
        if cfg.max_distance is not Nil:
            keep = dist <= cfg.max_distance
            dist, positions = dist[keep], positions[keep]
        # hits arrive closest first
        for d, position in zip(dist, positions):
            raw = float(db.timestamps[position]) - float(q_ts)
            bucket = (int(db.content_index[position]), math.floor(raw / cfg.offset_bin + 0.5))
            hits.setdefault(bucket, {}).setdefault(row, (float(d), raw))
    return hits


def _pool(hits: Dict[Bucket, Dict[int, Hit]]) -> Dict[Bucket, Dict[int, Hit]]:
    """
    Merge every pair of adjacent buckets into a window keyed by its lower bucket.

    A query that falls between two retained reference fingerprints splits its true-offset
    votes over two neighbouring buckets; the window holds both halves. A query fingerprint
    still counts once per window, through its closest hit.
    """
    windows: Dict[Bucket, Dict[int, Hit]] = {}
    for (content, bucket), rows in hits.items():
        for key in ((content, bucket - 1), (content, bucket)):
            window = windows.setdefault(key, {})
            for row, hit in rows.items():
                if row not in window or hit[0] < window[row][0]:
                    window[row] = hit
    return windows


def match_segment(segment: QuerySegment, index: Index, cfg: MatchConfig) -> MatchResult:
    """
    Decide which content, if any, a query segment was cut from.

    Every hit falls into the bucket ``(content, round((ref_ts - query_ts) / offset_bin))``.
    Votes are counted over windows of two adjacent buckets, at most once per query
    fingerprint and window, so that alignments straddling a bucket edge are not split.
    Votes in one window come from reference fingerprints that advance in step with the
    query, so the winner is both the most frequent and a temporally consistent match. The
    winner is the window with the most votes, then the lower content id, then the smaller
    absolute offset; it is a match when its votes reach
    ``ceil(majority_fraction * len(segment))``. The reported offset is the mean raw offset
    of the votes, each taken from its closest hit.

    :raises InvalidParameterError: If the segment has fewer than two fingerprints.
    :raises KindMismatchError: If the segment and index hold different kinds.
    """
    n = len(segment)
    if n < 2:
        raise InvalidParameterError(f"Query segment needs >= 2 fingerprints, got {n}")

    windows = _pool(_collect_hits(segment, index, cfg))
    content_ids = index.db.content_ids
    offsets = {key: float(np.mean([raw for _, raw in rows.values()]))
               for key, rows in windows.items()}
    ranked = sorted(windows, key=lambda w: (-len(windows[w]), content_ids[w[0]],
                                            abs(offsets[w]), w[1]))

    candidates: List[Candidate] = []
    taken: Dict[int, List[int]] = {}
    for content, bucket in ranked:
        if len(candidates) == cfg.candidates:
            break
        # overlapping windows of one content share votes
        if any(abs(bucket - other) <= 1 for other in taken.get(content, [])):
            continue
        taken.setdefault(content, []).append(bucket)
        candidates.append(Candidate(content_ids[content], offsets[(content, bucket)],
                                    len(windows[(content, bucket)])))

    threshold = majority_threshold(n, cfg.majority_fraction)
    matched = bool(candidates) and candidates[0].votes >= threshold
    return MatchResult(MatchStatus.MATCHED if matched else MatchStatus.NO_MATCH, threshold,
                       segment.start, n, candidates, segment.ground_truth)


def match_segments(segments: Sequence[QuerySegment], index: Index, cfg: MatchConfig, *,
                   threads: int = 1) -> List[MatchResult]:
    """
    Match segments independently; results keep the order of `segments`.
    """
    if threads > 1 and len(segments) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(lambda s: match_segment(s, index, cfg), segments))
    return [match_segment(segment, index, cfg) for segment in segments]
