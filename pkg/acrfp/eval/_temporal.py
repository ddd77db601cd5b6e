import io
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np
from scipy.spatial.distance import pdist, squareform

from ..audio import AudioBuffer
from ..core import InvalidParameterError, SignalTooShortError, atomic_write_text
from ..fingerprint import Fingerprinter, FingerprintKind, FingerprintSequence
from ._cell import Cell
from ._context import EvalContext
from ._experiment_type import ExperimentType
from ._rows import TemporalRow

__all__ = ("DistanceMatrix", "distance_matrix", "fingerprint_distances", "normalize_min_max",
           "save_distance_matrix", "temporal_cells", "run_temporal_experiment",
           "MIN_FINGERPRINTS", "DEFAULT_LAGS",)

MIN_FINGERPRINTS = 64
DEFAULT_LAGS = (1, 8, 32)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """
    Min-max normalized distances between all fingerprints of one clip.
    """

    kind: FingerprintKind
    values: np.ndarray

    def lag_mean(self, lag: int) -> float:
        """
        Mean normalized distance between fingerprints `lag` positions apart.
        """
        if not 1 <= lag < len(self):
            raise InvalidParameterError(f"Lag must be in [1, {len(self) - 1}], got {lag}")
        return float(np.diagonal(self.values, offset=lag).mean())

    def lag_means(self, lags: Sequence[int] = DEFAULT_LAGS) -> Dict[int, float]:
        return {lag: self.lag_mean(lag) for lag in lags}

    def __len__(self) -> int:
        return int(self.values.shape[0])


def fingerprint_distances(fingerprints: FingerprintSequence) -> np.ndarray:
    """
    Pairwise L2 distances (proposed) or differing-byte counts (min-hash).
    """
    values = fingerprints.values
    if fingerprints.kind is FingerprintKind.PROPOSED:
        return squareform(pdist(values.astype(np.float64), "euclidean"))
    return np.rint(squareform(pdist(values, "hamming")) * fingerprints.dims)


def normalize_min_max(distances: np.ndarray) -> np.ndarray:
    lo, hi = float(distances.min()), float(distances.max())
    if hi == lo:
        return np.zeros_like(distances, dtype=np.float64)
    return (distances - lo) / (hi - lo)


def distance_matrix(audio: AudioBuffer, fingerprinter: Fingerprinter) -> DistanceMatrix:
    """
    Fingerprint `audio` and min-max normalize all pairwise distances to ``[0, 1]``.

    :raises SignalTooShortError: If the clip yields fewer than 64 fingerprints.
    """
    fingerprints = fingerprinter.fingerprint(audio)
    if len(fingerprints) < MIN_FINGERPRINTS:
        raise SignalTooShortError(
            f"Distance matrix needs >= {MIN_FINGERPRINTS} fingerprints, got {len(fingerprints)}"
        )
    return DistanceMatrix(fingerprinter.kind,
                          normalize_min_max(fingerprint_distances(fingerprints)))


def save_distance_matrix(path: Path, matrix: DistanceMatrix) -> None:
    buffer = io.StringIO()
    np.savetxt(buffer, matrix.values, fmt="%.6f", delimiter=",")
    atomic_write_text(path, buffer.getvalue())


def _file_stem(content_id: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]", "_", content_id)


def _temporal_row(context: EvalContext, content_id: str, audio: AudioBuffer,
                  kind: FingerprintKind) -> TemporalRow:
    matrix = distance_matrix(audio, context.fingerprinter(kind))
    relative = Path("temporal") / f"{_file_stem(content_id)}_{kind.value}.csv"
    save_distance_matrix(context.spec.out_dir / relative, matrix)
    lags = matrix.lag_means(DEFAULT_LAGS)
    return TemporalRow(content_id, kind.value, len(matrix), lags[1], lags[8], lags[32],
                       relative.as_posix(), context.meta)


def temporal_cells(context: EvalContext) -> List[Cell]:
    """
    One cell per (clip, kind) over the first clips long enough for a distance matrix.
    """
    pipeline = context.settings.pipeline
    needed = pipeline.window_samples + (MIN_FINGERPRINTS - 1) * pipeline.stride_samples
    clips = [(c, a) for c, a in context.contents if a.n_frames >= needed]
    cells = []
    for content_id, audio in clips[:context.settings.eval.temporal_clips]:
        for kind in context.spec.kinds:
            cells.append(Cell(
                ExperimentType.TEMPORAL, f"{kind.value} {content_id}", TemporalRow,
                lambda c=content_id, a=audio, k=kind: [_temporal_row(context, c, a, k)],
            ))
    return cells


def run_temporal_experiment(context: EvalContext) -> List[TemporalRow]:
    """
    Write each clip's normalized distance matrix and return its lag-mean summary rows.
    """
    rows: List[TemporalRow] = []
    for cell in temporal_cells(context):
        rows.extend(cell.run())  # type: ignore[arg-type]
    return rows
