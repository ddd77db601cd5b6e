from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

import numpy as np

from ..core import (
    BinaryReader,
    BinaryWriter,
    FormatError,
    IndexBindingError,
    InvalidParameterError,
    atomic_write_bytes,
    read_artifact,
    seal,
    unseal,
)
from ..fingerprint import FingerprintKind
from ..refdb import ReferenceDB
from ._exhaustive_index import ExhaustiveIndex
from ._index import Index
from ._index_type import IndexType
from ._ivf_index import IvfIndex

__all__ = ("INDEX_MAGIC", "INDEX_VERSION", "IndexHeader", "encode_index", "decode_index",
           "read_index_header", "save_index", "load_index",)

INDEX_MAGIC = b"ACIX"
INDEX_VERSION = 1

_HEADER = "BBIIQHQI"


@dataclass(frozen=True)
class IndexHeader:
    """
    Fixed fields of an ``ACIX`` file, readable without the DB it belongs to.
    """

    index_type: IndexType
    kind: FingerprintKind
    nlist: int
    nprobe: int
    seed: int
    dims: int
    db_fingerprints: int
    db_digest: int


def _read_header(reader: BinaryReader, name: str) -> IndexHeader:
    type_code, kind_code, nlist, nprobe, seed, dims, count, digest = reader.read_struct(_HEADER)
    try:
        index_type = IndexType.from_code(type_code)
        kind = FingerprintKind.from_code(kind_code)
    except ValueError as e:
        raise FormatError(f"'{name}': {e}") from None
    return IndexHeader(index_type, kind, nlist, nprobe, seed, dims, count, digest)


def _open(data: bytes, name: str) -> Tuple[IndexHeader, BinaryReader]:
    reader = BinaryReader(unseal(data, INDEX_MAGIC, INDEX_VERSION, name=name), name=name)
    return _read_header(reader, name), reader


def read_index_header(data: bytes, *, name: str = "<buffer>") -> IndexHeader:
    return _open(data, name)[0]


def encode_index(index: Index) -> bytes:
    """
    Serialize an index into the ``ACIX`` format.

    The file records the kind, fingerprint count and digest of the DB it was built from;
    list entries refer to DB positions and repeat the vectors as binary16.
    """
    db = index.db
    writer = BinaryWriter()
    if isinstance(index, IvfIndex):
        nlist, nprobe, seed = index.nlist, index.nprobe, index.seed
    else:
        nlist, nprobe, seed = 0, 0, 0
    writer.write_struct(_HEADER, index.index_type.code, db.kind.code, nlist, nprobe, seed,
                        db.dims, len(db), db.digest)
    if isinstance(index, IvfIndex):
        writer.write_array(index.centroids, "f4")
        for positions in index.lists:
            writer.write_struct("I", positions.size)
            writer.write_array(positions, "u4")
            writer.write_array(db.values[positions], "f2")
    return seal(INDEX_MAGIC, INDEX_VERSION, writer.getvalue())


def decode_index(data: bytes, db: ReferenceDB, *, name: str = "<buffer>") -> Index:
    """
    Parse an ``ACIX`` file and bind it to `db`.

    :raises IndexBindingError: If `db` is not the DB the index was built from.
    :raises FormatError: For any envelope or structural problem.
    """
    header, reader = _open(data, name)
    nlist, dims = header.nlist, header.dims
    if (header.kind is not db.kind or header.db_fingerprints != len(db)
            or header.db_digest != db.digest or dims != db.dims):
        raise IndexBindingError(
            f"Index '{name}' was built for a {header.kind.value} DB of "
            f"{header.db_fingerprints} fingerprints (digest {header.db_digest:08x}), "
            f"not for {db!r} (digest {db.digest:08x})"
        )

    if header.index_type is IndexType.EXHAUSTIVE:
        reader.expect_end()
        return ExhaustiveIndex(db)

    centroids = reader.read_array("f4", nlist * dims).reshape(nlist, dims)
    lists = []
    for _ in range(nlist):
        size, = reader.read_struct("I")
        positions = reader.read_array("u4", size).astype(np.int64)
        vectors = reader.read_array("f2", size * dims).reshape(size, dims)
        if positions.size and (positions.max() >= len(db)
                               or not np.array_equal(vectors, db.values[positions])):
            raise IndexBindingError(f"Index '{name}' lists do not match the DB's fingerprints")
        lists.append(positions)
    reader.expect_end()
    try:
        return IvfIndex(db, centroids, lists, header.nprobe, header.seed)
    except InvalidParameterError as e:
        raise FormatError(f"'{name}': {e}") from None


def save_index(path: Union[str, Path], index: Index) -> None:
    atomic_write_bytes(Path(path), encode_index(index))


def load_index(path: Union[str, Path], db: ReferenceDB) -> Index:
    return decode_index(read_artifact(path, "index"), db, name=str(path))
