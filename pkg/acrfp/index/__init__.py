from ._bench import BenchResult, bench_fps
from ._distance import finalize, hamming_counts, l2_squared, top_k
from ._exhaustive_index import ExhaustiveIndex
from ._index import Index, Query, QueryBatch
from ._index_codec import (
    INDEX_MAGIC,
    INDEX_VERSION,
    IndexHeader,
    decode_index,
    encode_index,
    load_index,
    read_index_header,
    save_index,
)
from ._index_settings import IndexSettings, build_index
from ._index_type import IndexType
from ._ivf_index import IvfIndex, default_nlist, default_nprobe, ivf_build
from ._kmeans import kmeans
from ._search import ivf_search, search_exhaustive
from ._search_hit import SearchHit

__all__ = ("SearchHit", "Index", "Query", "QueryBatch", "IndexType", "ExhaustiveIndex",
           "IvfIndex", "ivf_build", "default_nlist", "default_nprobe", "kmeans",
           "search_exhaustive", "ivf_search", "l2_squared", "hamming_counts", "top_k",
           "finalize", "encode_index", "decode_index", "save_index", "load_index",
           "INDEX_MAGIC", "INDEX_VERSION", "BenchResult", "bench_fps", "IndexSettings",
           "build_index", "IndexHeader", "read_index_header",)
