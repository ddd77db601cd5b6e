import numpy as np
import pytest
from baby_steps import given, then, when
from pytest import raises

from acrfp.core import InvalidParameterError, SignalTooShortError
from acrfp.fingerprint import (
    RunningMean,
    WindowConfig,
    sliding_windows,
    time_average,
    window_count,
    window_means,
)
from acrfp.spectral import BandKind, BandSpectrogram


def make_bands(n_timesteps: int, n_bands: int = 64, seed: int = 0) -> BandSpectrogram:
    frames = np.random.default_rng(seed).standard_normal((n_timesteps, n_bands))
    return BandSpectrogram(frames, BandKind.MEL, n_bands, 0.016)


@pytest.mark.parametrize(("n_timesteps", "expected"), [(63, 0), (64, 1), (71, 1), (128, 9)])
def test_window_count(n_timesteps, expected):
    with when:
        res = window_count(n_timesteps, WindowConfig(64, 8))

    with then:
        assert res == expected


def test_sliding_windows_single():
    with given:
        bands = make_bands(64)

    with when:
        windows = sliding_windows(bands, WindowConfig())

    with then:
        assert len(windows) == 1
        timestamp, view = windows[0]
        assert timestamp == 0.0
        assert view.shape == (64, 64)


def test_sliding_windows_overlap():
    with given:
        bands = make_bands(128)

    with when:
        windows = sliding_windows(bands, WindowConfig(64, 8))

    with then:
        assert len(windows) == 9
        assert [ts for ts, _ in windows] == [i * 8 * 0.016 for i in range(9)]
        for (_, prev), (_, curr) in zip(windows, windows[1:]):
            assert np.array_equal(prev[8:], curr[:56])


def test_sliding_windows_too_short():
    with when, raises(SignalTooShortError):
        sliding_windows(make_bands(10), WindowConfig())


@pytest.mark.parametrize(("window_len", "stride"), [(64, 0), (64, 64), (8, 9)])
def test_window_config_invalid(window_len, stride):
    with when, raises(InvalidParameterError):
        WindowConfig(window_len, stride)


def test_time_average_constant():
    with when:
        res = time_average(np.full((64, 4), 3.5))

    with then:
        assert np.array_equal(res, [3.5] * 4)


def test_time_average_alternating():
    with given:
        window = np.zeros((64, 2))
        window[1::2, 0] = 1.0

    with when:
        res = time_average(window)

    with then:
        assert res[0] == 0.5
        assert res[1] == 0.0


def test_window_means_match_per_window_average():
    with given:
        bands = make_bands(200)
        cfg = WindowConfig()

    with when:
        means = window_means(bands, cfg)

    with then:
        expected = np.stack([time_average(view) for _, view in sliding_windows(bands, cfg)])
        assert np.allclose(means, expected, atol=1e-12)


def test_running_mean_matches_batch():
    with given:
        bands = make_bands(64 + 10 * 8, seed=7)
        running = RunningMean(bands.frames[:64])

    with when:
        for step in range(1, 11):
            res = running.advance(bands.frames[64 + (step - 1) * 8:64 + step * 8])

    with then:
        assert np.max(np.abs(res - time_average(bands.frames[80:144]))) < 1e-5


def test_running_mean_invalid_step():
    with given:
        running = RunningMean(np.zeros((4, 2)))

    with when, raises(InvalidParameterError):
        running.advance(np.zeros((5, 2)))
