import numpy as np
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import ChecksumError, IndexBindingError, MagicMismatchError
from acrfp.fingerprint import FingerprintKind
from acrfp.index import (
    ExhaustiveIndex,
    IndexType,
    IvfIndex,
    decode_index,
    encode_index,
    ivf_build,
    load_index,
    read_index_header,
    save_index,
)

from .._utils import make_db


def test_ivf_round_trip(tmp_path):
    with given:
        db = make_db({"a": 150, "b": 150})
        index = ivf_build(db, 16, seed=4, nprobe=3)
        path = tmp_path / "index.acix"

    with when:
        save_index(path, index)
        loaded = load_index(path, db)

    with then:
        assert isinstance(loaded, IvfIndex)
        assert (loaded.nlist, loaded.nprobe, loaded.seed) == (16, 3, 4)
        assert np.array_equal(loaded.centroids, index.centroids)
        assert all(np.array_equal(a, b) for a, b in zip(loaded.lists, index.lists))
        assert encode_index(loaded) == path.read_bytes()


def test_exhaustive_round_trip():
    with given:
        db = make_db({"a": 10}, FingerprintKind.MINHASH)

    with when:
        loaded = decode_index(encode_index(ExhaustiveIndex(db)), db)

    with then:
        assert isinstance(loaded, ExhaustiveIndex)
        assert loaded.db is db


def test_header_without_db():
    with given:
        db = make_db({"a": 100})
        data = encode_index(ivf_build(db, 8, seed=2, nprobe=2))

    with when:
        header = read_index_header(data)

    with then:
        assert header.index_type is IndexType.IVF
        assert header.kind is FingerprintKind.PROPOSED
        assert (header.nlist, header.nprobe, header.seed, header.dims) == (8, 2, 2, 32)
        assert header.db_fingerprints == 100
        assert header.db_digest == db.digest


def test_bound_to_other_db():
    with given:
        data = encode_index(ivf_build(make_db({"a": 100}, seed=1), 8))
        other = make_db({"a": 100}, seed=2)

    with when, raises(IndexBindingError) as exc_info:
        decode_index(data, other, name="index.acix")

    with then:
        assert "Index 'index.acix' was built for a proposed DB of 100 fingerprints" in str(
            exc_info.value)


def test_corrupted_index():
    with given:
        db = make_db({"a": 100})
        data = bytearray(encode_index(ivf_build(db, 8)))
        data[-10] ^= 0x01

    with when, raises(ChecksumError):
        decode_index(bytes(data), db)


def test_db_file_is_not_an_index():
    with given:
        db = make_db({"a": 10})
        data = b"ACDB" + encode_index(ExhaustiveIndex(db))[4:]

    with when, raises(MagicMismatchError):
        decode_index(data, db)
