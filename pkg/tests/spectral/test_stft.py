import numpy as np
import pytest
from baby_steps import given, then, when
from numpy.lib.stride_tricks import sliding_window_view
from pytest import raises
from scipy.signal import get_window

from acrfp.audio import AudioBuffer
from acrfp.core import InvalidParameterError, SignalTooShortError
from acrfp.spectral import frame_count, stft

from .._utils import make_noise, make_tone


@pytest.mark.parametrize(("n_samples", "expected"), [
    (512, 1),
    (767, 1),
    (768, 2),
    (16000, 61),
])
def test_frame_count(n_samples, expected):
    with when:
        res = frame_count(n_samples, 512, 256)

    with then:
        assert res == expected


def test_stft_shape():
    with given:
        audio = make_tone(1000.0, 1.0)

    with when:
        spec = stft(audio)

    with then:
        assert spec.frames.shape == (61, 257)
        assert spec.hop_seconds == 0.016


def test_stft_peak_at_tone_bin():
    with given:
        audio = make_tone(1000.0, 1.0)

    with when:
        spec = stft(audio)

    with then:
        # 1000 Hz / (16000 Hz / 512) = bin 32
        assert set(np.argmax(spec.frames, axis=1)) == {32}
        assert spec.bin_frequencies()[32] == 1000.0


def test_stft_silence_is_zero():
    with when:
        spec = stft(AudioBuffer(np.zeros(4096, dtype=np.float32), 16000))

    with then:
        assert np.all(spec.frames == 0.0)


def test_stft_parseval_on_white_noise():
    with given:
        audio = make_noise(0.5)
        samples = audio.samples.astype(np.float64)
        window = get_window("hann", 512, fftbins=True)
        frames = sliding_window_view(samples, 512)[::256]
        expected = np.sum(np.square(frames * window), axis=1) * 512

    with when:
        spec = stft(audio)

    with then:
        power = np.square(spec.frames)
        # the rfft keeps one half of the spectrum; DC and Nyquist appear once
        total = power[:, 0] + power[:, -1] + 2 * np.sum(power[:, 1:-1], axis=1)
        assert np.allclose(total, expected, rtol=1e-3, atol=0)


def test_stft_too_short():
    with when, raises(SignalTooShortError):
        stft(AudioBuffer(np.zeros(511), 16000))


@pytest.mark.parametrize(("frame_size", "hop"), [(500, 250), (512, 0), (512, 513)])
def test_stft_invalid_params(frame_size, hop):
    with when, raises(InvalidParameterError):
        stft(make_tone(), frame_size, hop)


def test_stft_rejects_stereo():
    with given:
        audio = AudioBuffer(np.zeros((2048, 2)), 16000)

    with when, raises(InvalidParameterError) as exc_info:
        stft(audio)

    with then:
        assert "mono" in str(exc_info.value)
