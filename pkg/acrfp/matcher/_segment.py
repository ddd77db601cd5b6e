import math
from typing import List, Optional

import numpy as np
from niltype import Nil, Nilable

from ..core import InvalidParameterError, SignalTooShortError
from ..fingerprint import FingerprintSequence
from ._query_segment import QuerySegment

__all__ = ("segment_stream", "segment_count",)

_EPSILON = 1e-9


def segment_count(duration: float, seg_len: float, hop: float) -> int:
    if seg_len > duration + _EPSILON:
        return 0
    return math.floor((duration - seg_len) / hop + _EPSILON) + 1


def segment_stream(fingerprints: FingerprintSequence, seg_len: float = 1.25,
                   hop: Optional[float] = None, *, spacing: Optional[float] = None,
                   ground_truth: Nilable[str] = Nil) -> List[QuerySegment]:
    """
    Cut a fingerprint stream into fixed-duration query segments.

    Each fingerprint covers ``spacing`` seconds, so the stream lasts ``n * spacing``.
    Segment ``j`` holds the fingerprints with timestamps in
    ``[t0 + j * hop, t0 + j * hop + seg_len)``. Segments do not overlap by default.

    :param fingerprints: Dense query fingerprints.
    :param seg_len: Segment duration in seconds.
    :param hop: Seconds between segment starts, `seg_len` if omitted.
    :param spacing: Seconds per fingerprint, the stream's own spacing if omitted.
    :param ground_truth: Content id attached to every segment.
    :raises SignalTooShortError: If the stream is shorter than one segment.
    """
    n = len(fingerprints)
    if n == 0:
        raise InvalidParameterError("Cannot segment an empty fingerprint stream")
    hop = seg_len if hop is None else hop
    if seg_len <= 0 or hop <= 0:
        raise InvalidParameterError(f"Segment length and hop must be > 0, got {seg_len}, {hop}")
    spacing = fingerprints.spacing if spacing is None else spacing
    if spacing <= 0:
        raise InvalidParameterError("Stream spacing is unknown; pass `spacing` explicitly")

    duration = n * spacing
    count = segment_count(duration, seg_len, hop)
    if count == 0:
        raise SignalTooShortError(
            f"Stream of {duration:.3f} s is shorter than one {seg_len:g} s segment"
        )

    timestamps = fingerprints.timestamps
    starts = timestamps[0] + np.arange(count) * hop
    lo = np.searchsorted(timestamps, starts - _EPSILON, side="left")
    hi = np.searchsorted(timestamps, starts + seg_len - _EPSILON, side="left")
    return [QuerySegment(fingerprints[int(a):int(b)], ground_truth) for a, b in zip(lo, hi)]
