import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.audio import save_wav
from acrfp.core import DuplicateContentError, InsufficientSamplesError, InvalidParameterError
from acrfp.fingerprint import (
    FingerprintKind,
    MinHashFingerprinter,
    MinHashParams,
    PcaSettings,
    ProposedFingerprinter,
)
from acrfp.refdb import (
    CorpusItem,
    build_db,
    build_db_from_audio,
    resolve_threads,
    train_pca_on_audio,
    train_pca_on_corpus,
)

from .._utils import make_music, make_noise
from ..fingerprint._utils import random_pca


@pytest.fixture()
def fingerprinter() -> ProposedFingerprinter:
    return ProposedFingerprinter(random_pca())


def test_build_from_audio(fingerprinter):
    with given:
        contents = [("b", make_music(1, 3.0)), ("a", make_music(2, 3.0))]

    with when:
        result = build_db_from_audio(contents, fingerprinter, skip=0, threads=2)

    with then:
        assert result.ok
        db = result.db
        assert db.content_ids == ["a", "b"]
        assert len(db.entry("a")) == 16
        assert db.pca is fingerprinter.model
        assert np.array_equal(db.entry("b").fingerprints.values,
                              fingerprinter.fingerprint(contents[0][1]).values)


def test_build_skip(fingerprinter):
    with given:
        contents = [("a", make_music(1, 3.0))]

    with when:
        dense = build_db_from_audio(contents, fingerprinter).db
        sparse = build_db_from_audio(contents, fingerprinter, skip=5).db

    with then:
        assert len(sparse) == 3
        assert np.array_equal(sparse.values, dense.values[[0, 6, 12]])


def test_build_independent_of_threads(fingerprinter):
    with given:
        contents = [(f"c{i}", make_noise(2.0, seed=i)) for i in range(4)]

    with when:
        single = build_db_from_audio(contents, fingerprinter, threads=1).db
        many = build_db_from_audio(contents, fingerprinter, threads=4).db

    with then:
        assert single.digest == many.digest


def test_build_reports_short_audio(fingerprinter):
    with given:
        contents = [("long", make_noise(2.0)), ("short", make_noise(0.2))]

    with when:
        result = build_db_from_audio(contents, fingerprinter)

    with then:
        assert not result.ok
        assert result.db.content_ids == ["long"]
        assert [f.content_id for f in result.failures] == ["short"]
        assert "shorter than one" in result.failures[0].reason


def test_build_duplicate_ids(fingerprinter):
    with given:
        contents = [("a", make_noise(2.0)), ("a", make_noise(2.0, seed=1))]

    with when, raises(DuplicateContentError):
        build_db_from_audio(contents, fingerprinter)


def test_build_negative_skip(fingerprinter):
    with when, raises(InvalidParameterError):
        build_db_from_audio([], fingerprinter, skip=-1)


def test_build_from_files(tmp_path):
    with given:
        save_wav(tmp_path / "a.wav", make_noise(2.0, rate=22050), sample_format="int16")
        (tmp_path / "broken.wav").write_bytes(b"RIFF")
        corpus = [
            CorpusItem("a", tmp_path / "a.wav"),
            CorpusItem("broken", tmp_path / "broken.wav"),
            CorpusItem("missing", tmp_path / "missing.wav"),
        ]
        fingerprinter = MinHashFingerprinter(MinHashParams.generate())

    with when:
        result = build_db(corpus, fingerprinter)

    with then:
        assert result.db.kind is FingerprintKind.MINHASH
        assert result.db.content_ids == ["a"]
        assert len(result.db) == 8
        assert [f.content_id for f in result.failures] == ["broken", "missing"]
        assert result.db.minhash is fingerprinter.params


@pytest.mark.parametrize(("threads", "expected"), [(1, 1), (3, 3)])
def test_resolve_threads(threads, expected):
    with when:
        res = resolve_threads(threads)

    with then:
        assert res == expected


def test_resolve_threads_invalid():
    with when, raises(InvalidParameterError):
        resolve_threads(-1)


def test_train_pca_on_audio():
    with given:
        audios = [make_music(seed, 10.0) for seed in range(3)]

    with when:
        model = train_pca_on_audio(audios, pca=PcaSettings(min_samples=100))

    with then:
        assert model.in_dims == 127
        assert model.out_dims == 32
        assert model.trained_on == 3 * 71


def test_train_pca_too_short():
    with when, raises(InsufficientSamplesError):
        train_pca_on_audio([make_noise(0.2)])


def test_train_pca_on_corpus_skips_unreadable(tmp_path):
    with given:
        for seed in range(2):
            save_wav(tmp_path / f"{seed}.wav", make_noise(10.0, seed=seed))
        corpus = [CorpusItem(str(seed), tmp_path / f"{seed}.wav") for seed in range(2)]
        corpus.append(CorpusItem("missing", tmp_path / "missing.wav"))

    with when:
        model = train_pca_on_corpus(corpus, pca=PcaSettings(min_samples=100))

    with then:
        assert model.trained_on == 2 * 71
