from ._build import (
    BuildFailure,
    BuildResult,
    build_db,
    build_db_from_audio,
    resolve_threads,
    sparsify,
    sparsify_db,
)
from ._content_entry import ContentEntry
from ._corpus import CorpusItem, load_manifest, save_manifest
from ._db_decoder import decode_db, load_db
from ._db_encoder import DB_MAGIC, DB_VERSION, encode_db, save_db
from ._reference_db import ReferenceDB
from ._train import train_pca_on_audio, train_pca_on_corpus

__all__ = ("ContentEntry", "ReferenceDB", "CorpusItem", "load_manifest", "save_manifest",
           "BuildFailure", "BuildResult", "build_db", "build_db_from_audio", "sparsify",
           "sparsify_db", "resolve_threads", "encode_db", "decode_db", "save_db", "load_db",
           "DB_MAGIC", "DB_VERSION", "train_pca_on_audio", "train_pca_on_corpus",)
