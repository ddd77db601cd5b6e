import logging
from pathlib import Path
from typing import List, Tuple

import numpy as np

from ..audio import AudioBuffer, save_wav
from ..core import InvalidParameterError, make_rng
from ..refdb import CorpusItem, save_manifest

__all__ = ("synthesize_clip", "synthesize_corpus",)

logger = logging.getLogger(__name__)

_MODES = (
    (0, 2, 4, 5, 7, 9, 11),
    (0, 2, 3, 5, 7, 8, 10),
    (0, 2, 3, 5, 7, 9, 10),
    (0, 2, 4, 5, 7, 9, 10),
    (0, 2, 3, 5, 7, 8, 11),
)
_DEGREE_STEPS = (-3, -2, -1, 1, 2, 3)
_STEPS_PER_BAR = 8
_PEAK = 0.8


def _midi_hz(note: float) -> float:
    return 440.0 * 2.0 ** ((note - 69) / 12)


def _scale_note(root: int, scale: Tuple[int, ...], index: int) -> int:
    return root + scale[index % 7] + 12 * (index // 7)


def _envelope(n: int, rate: int, attack: float, decay: float) -> np.ndarray:
    t = np.arange(n) / rate
    return np.minimum(t / attack, 1.0) * np.exp(-t / decay)


def _tone(freq: float, n: int, rate: int, harmonics: int, rolloff: float) -> np.ndarray:
    t = np.arange(n) / rate
    out = np.zeros(n)
    for h in range(1, harmonics + 1):
        if freq * h >= rate / 2:
            break
        out += np.sin(2 * np.pi * freq * h * t) / h ** rolloff
    return out


def _walk(rng: np.random.Generator, value: float, sigma: float, lo: float, hi: float) -> float:
    return float(np.clip(value + rng.normal(0.0, sigma), lo, hi))


def _add(track: np.ndarray, start: int, sound: np.ndarray) -> None:
    end = min(track.size, start + sound.size)
    if start < end:
        track[start:end] += sound[:end - start]


def synthesize_clip(rng: np.random.Generator, seconds: float,
                    sample_rate: int = 16000) -> AudioBuffer:
    """
    Render a music-like clip: a chord line, a melody and percussion.

    Tempo, key, mode, timbre and drum kit are drawn per clip. Every bar then takes a
    random-walk step in chord degree, register, brightness, mix and drum pattern, so the
    clip never loops and bars far apart drift further from each other than close ones.
    The same generator state reproduces a clip exactly.
    """
    if seconds <= 0:
        raise InvalidParameterError(f"Clip length must be > 0, got {seconds}")
    n = int(round(seconds * sample_rate))
    track = np.zeros(n)

    beat = int(sample_rate * 60.0 / rng.uniform(70.0, 160.0))
    bar = 4 * beat
    step_len = bar // _STEPS_PER_BAR
    root = int(rng.integers(36, 61))
    scale = _MODES[int(rng.integers(len(_MODES)))]

    chord_harmonics = int(rng.integers(3, 9))
    lead_harmonics = int(rng.integers(2, 7))
    rolloff = rng.uniform(0.7, 1.6)
    kick_hz = rng.uniform(40.0, 90.0)
    hat_decay = rng.uniform(0.01, 0.03)
    kicks = rng.random(_STEPS_PER_BAR) < 0.4
    kicks[0] = True
    hats = rng.random(_STEPS_PER_BAR) < 0.7

    degree = int(rng.integers(0, 7))
    register = 0.0
    chord_gain = rng.uniform(0.08, 0.16)
    lead_gain = rng.uniform(0.12, 0.25)
    rest_chance = rng.uniform(0.1, 0.4)

    for start in range(0, n, bar):
        degree = (degree + int(rng.choice(_DEGREE_STEPS))) % 7
        register = _walk(rng, register, 1.0, -5.0, 5.0)
        rolloff = _walk(rng, rolloff, 0.15, 0.5, 2.2)
        chord_gain = _walk(rng, chord_gain, 0.015, 0.05, 0.2)
        lead_gain = _walk(rng, lead_gain, 0.02, 0.08, 0.3)
        rest_chance = _walk(rng, rest_chance, 0.05, 0.0, 0.6)
        kicks ^= rng.random(_STEPS_PER_BAR) < 0.12
        kicks[0] = True
        hats ^= rng.random(_STEPS_PER_BAR) < 0.12
        base = degree + int(round(register))

        envelope = _envelope(bar, sample_rate, 0.03, rng.uniform(0.6, 2.0))
        for offset in (0, 2, 4):
            freq = _midi_hz(_scale_note(root, scale, base + offset))
            tone = _tone(freq, bar, sample_rate, chord_harmonics, rolloff)
            _add(track, start, chord_gain * tone * envelope)

        for step in range(_STEPS_PER_BAR):
            at = start + step * step_len
            if at >= n:
                break
            if rng.random() >= rest_chance:
                note = _scale_note(root + 12, scale, base + int(rng.integers(0, 8)))
                tone = _tone(_midi_hz(note), step_len, sample_rate, lead_harmonics, rolloff)
                lead = tone * _envelope(step_len, sample_rate, 0.01, 0.25)
                _add(track, at, lead_gain * lead)

            length = min(step_len, int(0.15 * sample_rate))
            if kicks[step]:
                kick = np.sin(2 * np.pi * kick_hz * np.arange(length) / sample_rate)
                _add(track, at, 0.5 * kick * _envelope(length, sample_rate, 0.002, 0.05))
            if hats[step]:
                burst = rng.standard_normal(length)
                _add(track, at, 0.08 * burst * _envelope(length, sample_rate, 0.001, hat_decay))

    peak = np.max(np.abs(track))
    if peak > 0:
        track *= _PEAK / peak
    return AudioBuffer(track.astype(np.float32), sample_rate)


def synthesize_corpus(out_dir: Path, n_clips: int = 200, seconds: float = 30.0, *,
                      seed: int = 0, sample_rate: int = 16000) -> List[CorpusItem]:
    """
    Write `n_clips` synthetic 16-bit WAV clips and a ``manifest.json`` listing them.

    Clip ``i`` depends only on ``(seed, i)``.

    :return: The manifest items, ids ``clip_0000``, ``clip_0001``, ...
    """
    if n_clips < 1:
        raise InvalidParameterError(f"Need at least one clip, got {n_clips}")
    out_dir = Path(out_dir)
    items = []
    for number in range(n_clips):
        content_id = f"clip_{number:04d}"
        path = out_dir / f"{content_id}.wav"
        clip = synthesize_clip(make_rng(seed, "synth", number), seconds, sample_rate)
        save_wav(path, clip, sample_format="int16")
        items.append(CorpusItem(content_id, path))
    save_manifest(out_dir / "manifest.json", items)
    logger.info("Synthesized %d clips into '%s'", n_clips, out_dir)
    return items
