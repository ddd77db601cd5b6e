from enum import Enum

__all__ = ("ExperimentType",)


class ExperimentType(Enum):
    NOISE = "noise"
    """
    Accuracy of both fingerprints under each artificial degradation.
    """

    SKIP = "skip"
    """
    Accuracy over exhaustive indexes as the DB gets sparser.
    """

    TEMPORAL = "temporal"
    """
    Normalized pairwise distances between the fingerprints of one clip.
    """

    SPEED = "speed"
    """
    Search throughput, index build time and storage size.
    """

    FALSE_POSITIVE = "false_positive"
    """
    How often white noise absent from the DB is matched to some content.
    """
