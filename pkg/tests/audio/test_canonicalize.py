import numpy as np
from baby_steps import given, then, when
from pytest import raises

from acrfp.audio import AudioBuffer, canonicalize
from acrfp.core import SampleRateError

from .._utils import make_noise, make_tone


def test_canonicalize_16k_mono_is_identity():
    with given:
        audio = make_noise(0.5)

    with when:
        res = canonicalize(audio)

    with then:
        assert res.sample_rate == 16000
        assert np.array_equal(res.samples, audio.samples)


def test_canonicalize_idempotent():
    with given:
        once = canonicalize(make_tone(440.0, 0.5, rate=44100))

    with when:
        twice = canonicalize(once)

    with then:
        assert np.array_equal(once.samples, twice.samples)


def test_canonicalize_identical_stereo_equals_mono():
    with given:
        mono = make_tone(1000.0, 0.5, rate=44100)
        stereo = AudioBuffer(np.stack([mono.samples, mono.samples], axis=1), 44100)

    with when:
        from_stereo = canonicalize(stereo)
        from_mono = canonicalize(mono)

    with then:
        assert np.array_equal(from_stereo.samples, from_mono.samples)


def test_canonicalize_sine_oracle():
    with given:
        audio = make_tone(1000.0, 1.0, rate=44100)
        expected = make_tone(1000.0, 1.0, rate=16000).samples

    with when:
        res = canonicalize(audio)

    with then:
        assert res.n_frames == 16000
        # edges carry the filter transient
        assert np.max(np.abs(res.samples[500:-500] - expected[500:-500])) < 1e-3


def test_canonicalize_downmix_is_mean():
    with given:
        left = np.full(1600, 0.5, dtype=np.float32)
        right = np.full(1600, -0.25, dtype=np.float32)
        audio = AudioBuffer(np.stack([left, right], axis=1), 16000)

    with when:
        res = canonicalize(audio)

    with then:
        assert np.allclose(res.samples, 0.125)


def test_canonicalize_rate_too_low():
    with when, raises(SampleRateError) as exc_info:
        canonicalize(AudioBuffer(np.zeros(100), 4000))

    with then:
        assert "below the minimum of 8000 Hz" in str(exc_info.value)


def test_canonicalize_keeps_band_limited_noise_energy():
    with given:
        rng = np.random.default_rng(0)
        spectrum = np.fft.rfft(rng.standard_normal(2 * 44100))
        spectrum[np.fft.rfftfreq(2 * 44100, 1 / 44100) > 7200.0] = 0
        noise = np.fft.irfft(spectrum, 2 * 44100)
        audio = AudioBuffer((0.1 * noise / np.std(noise)).astype(np.float32), 44100)

    with when:
        res = canonicalize(audio)

    with then:
        before = np.mean(np.square(audio.samples[2205:-2205].astype(np.float64)))
        after = np.mean(np.square(res.samples[800:-800].astype(np.float64)))
        assert abs(after / before - 1.0) < 0.1
