import numpy as np
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import (
    ArtifactNotFoundError,
    ChecksumError,
    FormatError,
    MagicMismatchError,
    TruncatedFileError,
)
from acrfp.fingerprint import FingerprintKind, FingerprintSequence, MinHashParams
from acrfp.refdb import ContentEntry, ReferenceDB, decode_db, encode_db, load_db, save_db

from .._utils import make_db, make_sequence
from ..fingerprint._utils import random_pca


def test_save_load_save_identical(tmp_path):
    with given:
        db = make_db({"a": 7, "b": 1, "c": 30}, skip=5)
        first, second = tmp_path / "first.acdb", tmp_path / "second.acdb"

    with when:
        save_db(first, db)
        save_db(second, load_db(first))

    with then:
        assert first.read_bytes() == second.read_bytes()


def test_round_trip_preserves_contents():
    with given:
        db = make_db({"long": 40, "short": 1, "mid": 9}, FingerprintKind.MINHASH)

    with when:
        loaded = decode_db(encode_db(db))

    with then:
        assert loaded.kind is FingerprintKind.MINHASH
        assert loaded.content_ids == db.content_ids
        assert [len(e) for e in loaded] == [40, 9, 1]
        assert np.array_equal(loaded.values, db.values)
        assert np.array_equal(loaded.timestamps, db.timestamps)
        assert loaded.digest == db.digest


def test_round_trip_preserves_pca():
    with given:
        model = random_pca()
        entries = [ContentEntry("a", make_sequence(3, skip=2))]
        db = ReferenceDB(FingerprintKind.PROPOSED, entries, 2, pca=model)

    with when:
        loaded = decode_db(encode_db(db))

    with then:
        assert loaded.skip == 2
        assert loaded.pca.same_as(model)
        assert loaded.settings == db.settings


def test_round_trip_preserves_minhash_params():
    with given:
        params = MinHashParams.generate(seed=11)
        db = ReferenceDB(FingerprintKind.MINHASH, [], 0, minhash=params)

    with when:
        loaded = decode_db(encode_db(db))

    with then:
        assert loaded.minhash.same_as(params)
        assert len(loaded) == 0


def test_corrupted_byte():
    with given:
        data = bytearray(encode_db(make_db({"a": 10})))
        data[len(data) // 2] ^= 0xFF

    with when, raises(ChecksumError):
        decode_db(bytes(data))


def test_truncated():
    with given:
        data = encode_db(make_db({"a": 10}))

    with when, raises(TruncatedFileError):
        decode_db(data[:-100])


def test_wrong_magic():
    with given:
        data = b"ACIX" + encode_db(make_db({"a": 1}))[4:]

    with when, raises(MagicMismatchError):
        decode_db(data)


def test_off_grid_timestamps():
    with given:
        seq = make_sequence(3)
        shifted = FingerprintSequence(seq.values, seq.timestamps * 1.5, seq.kind)
        db = ReferenceDB(FingerprintKind.PROPOSED, [ContentEntry("a", shifted)], 0)

    with when, raises(FormatError) as exc_info:
        encode_db(db)

    with then:
        assert "not on the DB's fingerprint grid" in str(exc_info.value)


def test_load_missing(tmp_path):
    with when, raises(ArtifactNotFoundError):
        load_db(tmp_path / "missing.acdb")


def test_digest_changes_with_contents():
    with when:
        first, second = make_db({"a": 5}, seed=1), make_db({"a": 5}, seed=2)

    with then:
        assert first.digest != second.digest
        assert first.digest == make_db({"a": 5}, seed=1).digest
