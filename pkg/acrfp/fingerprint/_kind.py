from enum import Enum

__all__ = ("FingerprintKind",)


class FingerprintKind(Enum):
    """
    The two fingerprint families a reference DB can hold.
    """

    PROPOSED = "proposed"
    """
    32-dimensional half-precision vectors compared by L2 distance.
    """

    MINHASH = "minhash"
    """
    72-byte min-hash signatures compared by Hamming distance over bytes.
    """

    @property
    def code(self) -> int:
        return 0 if self is FingerprintKind.PROPOSED else 1

    @classmethod
    def from_code(cls, code: int) -> "FingerprintKind":
        for kind in cls:
            if kind.code == code:
                return kind
        raise ValueError(f"Unknown fingerprint kind code {code}")
