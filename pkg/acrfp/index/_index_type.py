from enum import Enum

__all__ = ("IndexType",)


class IndexType(Enum):
    EXHAUSTIVE = "exhaustive"
    """
    Scans every DB fingerprint; exact for both kinds.
    """

    IVF = "ivf"
    """
    Inverted file over k-means clusters; proposed fingerprints only.
    """

    @property
    def code(self) -> int:
        return 0 if self is IndexType.EXHAUSTIVE else 1

    @classmethod
    def from_code(cls, code: int) -> "IndexType":
        for index_type in cls:
            if index_type.code == code:
                return index_type
        raise ValueError(f"Unknown index type code {code}")
