from pathlib import Path

import numpy as np
from baby_steps import given, then, when
from pytest import raises

from acrfp.audio import load_wav
from acrfp.core import InvalidParameterError, make_rng
from acrfp.eval import synthesize_clip, synthesize_corpus
from acrfp.refdb import load_manifest


def test_clip_is_reproducible():
    with when:
        first = synthesize_clip(make_rng(0, "clip"), 2.0)
        second = synthesize_clip(make_rng(0, "clip"), 2.0)

    with then:
        assert np.array_equal(first.samples, second.samples)


def test_clips_differ_by_seed():
    with when:
        first = synthesize_clip(make_rng(0, "clip"), 2.0)
        second = synthesize_clip(make_rng(1, "clip"), 2.0)

    with then:
        assert not np.allclose(first.samples, second.samples)


def test_clip_shape_and_level():
    with when:
        clip = synthesize_clip(make_rng(0, "clip"), 1.5, 8000)

    with then:
        assert clip.sample_rate == 8000
        assert clip.n_frames == 12000
        assert clip.samples.dtype == np.float32
        assert np.max(np.abs(clip.samples)) == np.float32(0.8)


def test_clip_invalid_length():
    with when, raises(InvalidParameterError):
        synthesize_clip(make_rng(0, "clip"), 0.0)


def test_corpus(tmp_path: Path):
    with when:
        items = synthesize_corpus(tmp_path, 3, 1.0, seed=5)

    with then:
        assert [i.content_id for i in items] == ["clip_0000", "clip_0001", "clip_0002"]
        assert load_manifest(tmp_path / "manifest.json") == items
        audio = load_wav(items[2].path)
        assert (audio.sample_rate, audio.n_frames) == (16000, 16000)


def test_corpus_clip_depends_on_seed_and_number(tmp_path: Path):
    with given:
        synthesize_corpus(tmp_path / "a", 2, 1.0, seed=5)
        synthesize_corpus(tmp_path / "b", 1, 1.0, seed=5)

    with when:
        first = load_wav(tmp_path / "a" / "clip_0000.wav")
        again = load_wav(tmp_path / "b" / "clip_0000.wav")
        other = load_wav(tmp_path / "a" / "clip_0001.wav")

    with then:
        assert np.array_equal(first.samples, again.samples)
        assert not np.array_equal(first.samples, other.samples)


def test_corpus_needs_clips(tmp_path: Path):
    with when, raises(InvalidParameterError):
        synthesize_corpus(tmp_path, 0)
