from dataclasses import dataclass

__all__ = ("SearchHit",)


@dataclass(frozen=True)
class SearchHit:
    """
    One neighbour of a query fingerprint.

    `distance` is the L2 distance for proposed fingerprints and the number of differing
    bytes for min-hash signatures. `position` is the fingerprint's flat DB position.
    """

    content_id: str
    ref_timestamp: float
    distance: float
    position: int
