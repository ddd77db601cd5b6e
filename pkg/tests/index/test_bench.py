import numpy as np
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import InvalidParameterError
from acrfp.index import ExhaustiveIndex, bench_fps, ivf_build

from .._utils import make_db


def test_bench_exhaustive():
    with given:
        db = make_db({"a": 200})
        queries = db.values[:10]

    with when:
        result = bench_fps(ExhaustiveIndex(db), queries, k=5, runs=3, min_queries=100)

    with then:
        assert result.n_queries == 100
        assert len(result.run_fps) == 3
        assert result.fps == sorted(result.run_fps)[1]
        assert result.fps > 0
        assert result.k == 5
        assert result.threads == 1
        assert result.metadata["db_size"] == 200
        assert result.metadata["cpu_count"] >= 1


def test_bench_ivf_threads():
    with given:
        db = make_db({"a": 500})
        index = ivf_build(db, 16, nprobe=1)

    with when:
        result = bench_fps(index, np.asarray(db.values[:50]), runs=1, min_queries=50,
                           threads=2)

    with then:
        assert result.n_queries == 50
        assert result.threads == 2
        assert result.index.startswith("IvfIndex(nlist=16, nprobe=1")


def test_bench_invalid_runs():
    with when, raises(InvalidParameterError):
        bench_fps(ExhaustiveIndex(make_db({"a": 2})), np.zeros((1, 32)), runs=0)


def test_bench_no_queries():
    with when, raises(InvalidParameterError):
        bench_fps(ExhaustiveIndex(make_db({"a": 2})), np.zeros((0, 32)))
