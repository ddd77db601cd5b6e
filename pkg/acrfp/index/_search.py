from typing import List, Optional

from ..refdb import ReferenceDB
from ._exhaustive_index import ExhaustiveIndex
from ._index import Query
from ._ivf_index import IvfIndex
from ._search_hit import SearchHit

__all__ = ("search_exhaustive", "ivf_search",)


def search_exhaustive(db: ReferenceDB, query: Query, k: int) -> List[SearchHit]:
    return ExhaustiveIndex(db).search(query, k)


def ivf_search(index: IvfIndex, query: Query, k: int,
               nprobe: Optional[int] = None) -> List[SearchHit]:
    """
    Search `index`, probing `nprobe` lists instead of its default when given.
    """
    if nprobe is not None and nprobe != index.nprobe:
        index = index.with_nprobe(nprobe)
    return index.search(query, k)
