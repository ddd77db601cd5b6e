import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import (
    DimensionMismatchError,
    EmptyDatabaseError,
    InvalidParameterError,
    KindMismatchError,
)
from acrfp.fingerprint import FingerprintKind
from acrfp.index import ExhaustiveIndex, SearchHit, search_exhaustive, top_k
from acrfp.refdb import ReferenceDB

from .._utils import make_db
from ._utils import db_from_vectors


def test_query_equal_to_stored_vector():
    with given:
        db = make_db({"a": 20, "b": 20})
        query = db.entry("b").fingerprints[7]

    with when:
        hits = search_exhaustive(db, query, 3)

    with then:
        assert hits[0] == SearchHit("b", float(query.timestamp), 0.0, 27)
        assert hits[1].distance >= hits[0].distance


def test_k_larger_than_db():
    with given:
        db = make_db({"a": 4})

    with when:
        hits = search_exhaustive(db, np.zeros(32, dtype=np.float16), 10)

    with then:
        assert len(hits) == 4
        assert [h.distance for h in hits] == sorted(h.distance for h in hits)


def test_matches_brute_force():
    with given:
        vectors = np.random.default_rng(0).standard_normal((1000, 32)).astype(np.float16)
        db = db_from_vectors(vectors)
        query = np.random.default_rng(1).standard_normal(32).astype(np.float16)

    with when:
        hits = ExhaustiveIndex(db).search(query, 10)

    with then:
        d2 = np.square(db.widened() - query.astype(np.float32)).sum(axis=1, dtype=np.float32)
        expected = np.lexsort((np.arange(1000), d2))[:10]
        assert [h.position for h in hits] == expected.tolist()
        assert [h.distance for h in hits] == pytest.approx(np.sqrt(d2[expected]).tolist())


def test_ties_by_content_then_timestamp():
    with given:
        vectors = np.zeros((6, 32), dtype=np.float16)
        db = db_from_vectors(vectors, per_content=3)

    with when:
        hits = ExhaustiveIndex(db).search(np.zeros(32), 6)

    with then:
        assert [(h.content_id, h.ref_timestamp) for h in hits] == [
            ("c0000", 0.0), ("c0000", 0.128), ("c0000", 0.256),
            ("c0001", 0.0), ("c0001", 0.128), ("c0001", 0.256),
        ]


def test_hamming_search():
    with given:
        db = make_db({"a": 30, "b": 30}, FingerprintKind.MINHASH)
        query = db.entry("a").fingerprints.values[4].copy()
        query[:10] = 0

    with when:
        hits = search_exhaustive(db, query, 2)

    with then:
        assert hits[0].content_id == "a"
        assert hits[0].position == 4
        assert hits[0].distance == float(np.count_nonzero(db.values[4][:10] != 0))
        assert hits[0].distance <= 10


def test_batch_matches_single():
    with given:
        db = make_db({"a": 50, "b": 50})
        queries = db.values[::7]
        index = ExhaustiveIndex(db)

    with when:
        batch = index.search_batch(queries, 3, threads=4)

    with then:
        assert batch == [index.search(q, 3) for q in queries]


def test_kind_mismatch():
    with given:
        db = make_db({"a": 3})
        signature = make_db({"b": 1}, FingerprintKind.MINHASH).entry("b").fingerprints[0]

    with when, raises(KindMismatchError) as exc_info:
        search_exhaustive(db, signature, 1)

    with then:
        assert str(exc_info.value) == "Cannot search minhash fingerprints in a proposed index"


def test_uint8_in_proposed_index():
    with when, raises(KindMismatchError):
        search_exhaustive(make_db({"a": 3}), np.zeros(32, dtype=np.uint8), 1)


def test_dimension_mismatch():
    with when, raises(DimensionMismatchError):
        search_exhaustive(make_db({"a": 3}), np.zeros(16), 1)


def test_empty_db():
    with given:
        db = ReferenceDB(FingerprintKind.PROPOSED, [], 0)

    with when, raises(EmptyDatabaseError):
        search_exhaustive(db, np.zeros(32), 1)


def test_invalid_k():
    with when, raises(InvalidParameterError):
        search_exhaustive(make_db({"a": 3}), np.zeros(32), 0)


def test_top_k_tie_break():
    with given:
        dist = np.array([3.0, 1.0, 1.0, 0.5, 1.0])
        positions = np.array([10, 40, 20, 30, 50])

    with when:
        res_dist, res_positions = top_k(dist, positions, 3)

    with then:
        assert res_dist.tolist() == [0.5, 1.0, 1.0]
        assert res_positions.tolist() == [30, 20, 40]
