import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.audio import AudioBuffer
from acrfp.core import InvalidParameterError
from acrfp.spectral import (
    LOG_FLOOR,
    BandKind,
    Spectrogram,
    bark_filter_bank,
    bark_project,
    hz_to_bark,
    hz_to_mel,
    mel_filter_bank,
    mel_project,
    mel_to_hz,
    stft,
)

from .._utils import make_noise, make_tone


def test_mel_round_trip():
    with given:
        freqs = np.array([0.0, 62.5, 440.0, 1000.0, 8000.0])

    with when:
        res = mel_to_hz(hz_to_mel(freqs))

    with then:
        assert np.allclose(res, freqs)


def test_mel_1000hz():
    with when:
        res = hz_to_mel(1000.0)

    with then:
        assert res == pytest.approx(1000.0, abs=0.1)


def test_bark_monotone():
    with when:
        res = hz_to_bark(np.linspace(0, 8000, 100))

    with then:
        assert np.all(np.diff(res) > 0)


def test_mel_filter_bank_shape():
    with when:
        weights = mel_filter_bank(64, 62.5, 8000.0, 512, 16000)

    with then:
        assert weights.shape == (64, 257)
        assert weights.min() >= 0.0
        assert weights.max() <= 1.0
        assert np.all(weights.sum(axis=1) > 0)


def test_bark_filter_bank_partitions_bins():
    with when:
        weights = bark_filter_bank(32, 0.0, 8000.0, 512, 16000)

    with then:
        assert weights.shape == (32, 257)
        # every bin in [0, 8000] belongs to exactly one band
        assert np.all(weights.sum(axis=0) == 1.0)


@pytest.mark.parametrize(("n_bands", "f_lo", "f_hi"), [
    (1, 0.0, 8000.0),
    (64, 8000.0, 62.5),
    (64, 62.5, 9000.0),
    (64, -1.0, 8000.0),
])
def test_filter_bank_invalid_range(n_bands, f_lo, f_hi):
    with when, raises(InvalidParameterError):
        mel_filter_bank(n_bands, f_lo, f_hi, 512, 16000)


def test_mel_project_shape():
    with given:
        spec = stft(make_noise(1.0))

    with when:
        bands = mel_project(spec)

    with then:
        assert bands.band_kind is BandKind.MEL
        assert bands.frames.shape == (61, 64)
        assert bands.hop_seconds == spec.hop_seconds


def test_mel_project_silence_hits_floor():
    with given:
        spec = stft(make_tone(amplitude=0.0))

    with when:
        bands = mel_project(spec)

    with then:
        assert np.allclose(bands.frames, np.log(LOG_FLOOR))


def test_bark_project_tone_band():
    with given:
        spec = stft(make_tone(1000.0))
        weights = bark_filter_bank(32, 0.0, 8000.0, 512, 16000)

    with when:
        bands = bark_project(spec)

    with then:
        assert bands.frames.shape == (61, 32)
        expected_band = int(np.argmax(weights[:, 32]))
        assert set(np.argmax(bands.frames, axis=1)) == {expected_band}


@pytest.mark.parametrize("gain", [0.5, 2.0])
def test_mel_project_gain_is_log_shift(gain):
    with given:
        audio = make_noise(1.0)
        scaled = AudioBuffer(audio.samples * gain, audio.sample_rate)

    with when:
        base = mel_project(stft(audio))
        shifted = mel_project(stft(scaled))

    with then:
        assert np.allclose(shifted.frames, base.frames + np.log(gain), rtol=0, atol=1e-4)


def test_mel_project_uniform_spectrum_oracle():
    with given:
        spec = Spectrogram(np.ones((2, 257)), 512, 256, 16000)
        mels = np.linspace(2595.0 * np.log10(1.0 + 62.5 / 700.0),
                           2595.0 * np.log10(1.0 + 8000.0 / 700.0), 66)
        edges = [700.0 * (10.0 ** (m / 2595.0) - 1.0) for m in mels]
        expected = []
        for band in range(64):
            lower, center, upper = edges[band], edges[band + 1], edges[band + 2]
            total = 0.0
            for k in range(257):
                f = k * 16000 / 512
                if lower < f <= center:
                    total += (f - lower) / (center - lower)
                elif center < f < upper:
                    total += (upper - f) / (upper - center)
            expected.append(np.log(total + LOG_FLOOR))

    with when:
        bands = mel_project(spec)

    with then:
        assert np.allclose(bands.frames, [expected, expected], rtol=0, atol=1e-6)
