import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import (
    DimensionMismatchError,
    DuplicateContentError,
    InvalidParameterError,
    KindMismatchError,
    MissingModelError,
)
from acrfp.fingerprint import FingerprintKind, MinHashFingerprinter, MinHashParams
from acrfp.refdb import ContentEntry, ReferenceDB

from .._utils import make_db, make_sequence


def test_entries_sorted_by_id():
    with when:
        db = make_db({"zeta": 3, "alpha": 2, "mid": 4})

    with then:
        assert db.content_ids == ["alpha", "mid", "zeta"]
        assert db.offsets.tolist() == [0, 2, 6, 9]
        assert db.content_index.tolist() == [0, 0, 1, 1, 1, 1, 2, 2, 2]
        assert len(db) == 9
        assert db.n_contents == 3


def test_flat_arrays_follow_entries():
    with given:
        db = make_db({"b": 3, "a": 2})

    with when:
        position = 3

    with then:
        assert db.content_id_at(position) == "b"
        assert np.array_equal(db.values[position], db.entry("b").fingerprints.values[1])
        assert db.timestamps[position] == db.entry("b").timestamps[1]


def test_widened_is_exact():
    with given:
        db = make_db({"a": 5})

    with when:
        widened = db.widened()

    with then:
        assert widened.dtype == np.float32
        assert np.array_equal(widened.astype(np.float16), db.values)
        assert db.widened() is widened


def test_arrays_read_only():
    with given:
        db = make_db({"a": 2})

    with when, raises(ValueError):
        db.values[0, 0] = 1.0


def test_empty_db():
    with when:
        db = ReferenceDB(FingerprintKind.MINHASH, [], 0)

    with then:
        assert len(db) == 0
        assert db.values.shape == (0, 72)
        assert repr(db) == "ReferenceDB(kind=minhash, skip=0, contents=0, fingerprints=0)"


def test_duplicate_content():
    with given:
        entries = [ContentEntry("a", make_sequence(2)), ContentEntry("a", make_sequence(3))]

    with when, raises(DuplicateContentError):
        ReferenceDB(FingerprintKind.PROPOSED, entries, 0)


def test_kind_mismatch():
    with given:
        entries = [ContentEntry("a", make_sequence(2, FingerprintKind.MINHASH))]

    with when, raises(KindMismatchError) as exc_info:
        ReferenceDB(FingerprintKind.PROPOSED, entries, 0)

    with then:
        assert str(exc_info.value) == ("Content 'a' holds minhash fingerprints, "
                                       "DB kind is proposed")


def test_dims_mismatch():
    with given:
        seq = make_sequence(2)
        narrow = type(seq)(seq.values[:, :16], seq.timestamps, seq.kind)

    with when, raises(DimensionMismatchError):
        ReferenceDB(FingerprintKind.PROPOSED, [ContentEntry("a", narrow)], 0)


def test_model_kind_mismatch():
    with when, raises(InvalidParameterError):
        ReferenceDB(FingerprintKind.PROPOSED, [], 0, minhash=MinHashParams.generate())


def test_unknown_entry():
    with when, raises(KeyError):
        make_db({"a": 1}).entry("b")


def test_empty_content_id():
    with when, raises(InvalidParameterError):
        ContentEntry("", make_sequence(1))


def test_make_fingerprinter_without_model():
    with when, raises(MissingModelError) as exc_info:
        make_db({"a": 1}).make_fingerprinter()

    with then:
        assert "acrfp train-pca" in str(exc_info.value)


def test_make_fingerprinter_minhash():
    with given:
        params = MinHashParams.generate()
        db = ReferenceDB(FingerprintKind.MINHASH, [], 0, minhash=params)

    with when:
        fingerprinter = db.make_fingerprinter()

    with then:
        assert isinstance(fingerprinter, MinHashFingerprinter)
        assert fingerprinter.params is params


@pytest.mark.parametrize(("skip", "spacing"), [(0, 0.128), (5, 0.768)])
def test_spacing(skip, spacing):
    with when:
        db = ReferenceDB(FingerprintKind.PROPOSED, [], skip)

    with then:
        assert db.spacing == pytest.approx(spacing)
