from hashlib import blake2b
from typing import Union

import numpy as np

__all__ = ("derive_seed", "make_rng",)

SeedPart = Union[int, float, str]


def derive_seed(root: int, *parts: SeedPart) -> int:
    """
    Derive a 64-bit seed from a root seed and a path of labels.

    The same `(root, parts)` always yields the same seed, independent of thread count and
    execution order, so every random choice can be keyed by what it is for.

    :param root: The run-level seed.
    :param parts: Labels identifying the consumer, e.g. ``("excerpt", content_id, 0)``.
    :return: A non-negative integer below 2**64.
    """
    key = "//".join([str(root), *(str(part) for part in parts)])
    digest = blake2b(key.encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def make_rng(root: int, *parts: SeedPart) -> np.random.Generator:
    return np.random.default_rng(derive_seed(root, *parts))
