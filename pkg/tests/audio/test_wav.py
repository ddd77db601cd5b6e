import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises
from scipy.io import wavfile

from acrfp.audio import AudioBuffer, load_wav, save_wav
from acrfp.core import AudioDecodeError, EmptyAudioError, InvalidParameterError


def test_load_wav_int16_stereo(tmp_path):
    with given:
        path = tmp_path / "stereo.wav"
        data = np.zeros((44100, 2), dtype=np.int16)
        data[:, 0] = 16384
        wavfile.write(path, 44100, data)

    with when:
        audio = load_wav(path)

    with then:
        assert audio.sample_rate == 44100
        assert audio.channels == 2
        assert audio.n_frames == 44100
        assert np.all(audio.samples[:, 0] == 0.5)
        assert np.all(audio.samples[:, 1] == 0.0)


def test_load_wav_uint8_midpoint(tmp_path):
    with given:
        path = tmp_path / "u8.wav"
        wavfile.write(path, 8000, np.full(800, 128, dtype=np.uint8))

    with when:
        audio = load_wav(path)

    with then:
        assert np.all(np.abs(audio.samples) <= 1 / 127)


def test_load_wav_int32_matches_int16(tmp_path):
    with given:
        values = np.round(np.sin(np.linspace(0, 20, 1600)) * 20000).astype(np.int16)
        wavfile.write(tmp_path / "a16.wav", 16000, values)
        wavfile.write(tmp_path / "a32.wav", 16000, values.astype(np.int32) << 16)

    with when:
        audio16 = load_wav(tmp_path / "a16.wav")
        audio32 = load_wav(tmp_path / "a32.wav")

    with then:
        assert np.max(np.abs(audio16.samples - audio32.samples)) <= 2 ** -15


def test_save_load_float32_exact(tmp_path):
    with given:
        path = tmp_path / "f32.wav"
        audio = AudioBuffer(np.linspace(-1, 1, 999, dtype=np.float32), 16000)

    with when:
        save_wav(path, audio)
        loaded = load_wav(path)

    with then:
        assert loaded.sample_rate == 16000
        assert np.array_equal(loaded.samples, audio.samples)


def test_load_wav_missing(tmp_path):
    with when, raises(AudioDecodeError) as exc_info:
        load_wav(tmp_path / "missing.wav")

    with then:
        assert "does not exist" in str(exc_info.value)


def test_load_wav_not_wav(tmp_path):
    with given:
        path = tmp_path / "text.wav"
        path.write_text("not a wav file")

    with when, raises(AudioDecodeError):
        load_wav(path)


def test_load_wav_empty(tmp_path):
    with given:
        path = tmp_path / "empty.wav"
        wavfile.write(path, 16000, np.zeros(0, dtype=np.int16))

    with when, raises(EmptyAudioError):
        load_wav(path)


def test_save_wav_unknown_format(tmp_path):
    with when, raises(InvalidParameterError):
        save_wav(tmp_path / "x.wav", AudioBuffer(np.zeros(10), 16000), sample_format="pcm8")


@pytest.mark.parametrize("samples", [np.zeros(0), np.zeros((2, 2, 2))])
def test_audio_buffer_invalid(samples):
    with when, raises((EmptyAudioError, InvalidParameterError)):
        AudioBuffer(samples, 16000)


def test_load_wav_truncated_header(tmp_path):
    with given:
        path = tmp_path / "cut.wav"
        path.write_bytes(b"RIFF")

    with when, raises(AudioDecodeError):
        load_wav(path)
