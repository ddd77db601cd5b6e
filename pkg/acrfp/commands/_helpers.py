import json
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

from rich.console import Console

from .._settings import Settings
from ..audio import AudioBuffer, load_wav
from ..core import MissingModelError, atomic_write_text
from ..fingerprint import (
    Fingerprinter,
    FingerprintKind,
    MinHashFingerprinter,
    ProposedFingerprinter,
    load_pca,
)

__all__ = ("KIND_CHOICES", "load_audio", "make_fingerprinter", "write_json_lines",)

KIND_CHOICES = tuple(kind.value for kind in FingerprintKind)


def load_audio(path: Path, settings: Settings) -> AudioBuffer:
    return settings.pipeline.canonicalize(load_wav(path))


def make_fingerprinter(kind: FingerprintKind, settings: Settings,
                       pca_path: Optional[Path]) -> Fingerprinter:
    """
    :raises MissingModelError: For the proposed kind without a PCA model.
    """
    pipeline = settings.pipeline
    if kind is FingerprintKind.MINHASH:
        return MinHashFingerprinter(settings.minhash.make_params(pipeline), pipeline)
    if pca_path is None:
        raise MissingModelError(
            "Proposed fingerprints need a PCA model: train one with 'acrfp train-pca' "
            "and pass it with --pca"
        )
    return ProposedFingerprinter(load_pca(pca_path), pipeline)


def write_json_lines(records: Iterable[Dict[str, Any]], out: Optional[Path],
                     console: Console) -> int:
    """
    Write one JSON object per line to `out`, or to `console` when `out` is None.
    """
    lines = [json.dumps(record, separators=(",", ":")) for record in records]
    if out is None:
        for line in lines:
            console.out(line)
    else:
        atomic_write_text(out, "".join(f"{line}\n" for line in lines))
    return len(lines)
