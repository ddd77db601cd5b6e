import logging
from typing import List, Optional

import numpy as np

from ..audio import AudioBuffer
from ..core import NoiseSkipped, SignalTooShortError, derive_seed, make_rng
from ..degrade import NoiseKind, NoiseSpec, apply_noise
from ..fingerprint import FingerprintKind
from ..index import IndexType
from ..matcher import MatchResult, match_segments, segment_stream
from ._cell import Cell
from ._context import EvalContext
from ._experiment_type import ExperimentType
from ._rows import AccuracyRow

__all__ = ("evaluate_accuracy", "noise_cells", "skip_cells", "false_positive_cells",
           "run_noise_experiment", "run_skip_experiment", "run_false_positive_check",
           "WHITE_NOISE_STD",)

logger = logging.getLogger(__name__)

WHITE_NOISE_STD = 0.1


def _tally(experiment: ExperimentType, kind: FingerprintKind, condition: str, skip: int,
           index_type: IndexType, results: List[MatchResult],
           context: EvalContext) -> AccuracyRow:
    n = len(results)
    if n == 0:
        raise SignalTooShortError("No query produced a full segment")
    matched = sum(1 for r in results if r.is_match)
    if experiment is ExperimentType.FALSE_POSITIVE:
        correct, incorrect, no_match = 0, matched, n - matched
        accuracy = 100.0 * no_match / n
    else:
        correct = sum(1 for r in results if r.correct)
        incorrect = matched - correct
        no_match = n - matched
        accuracy = 100.0 * correct / n
    return AccuracyRow(experiment.value, kind.value, condition, skip, index_type.value,
                       accuracy, 100.0 * incorrect / n, correct, incorrect, no_match, n,
                       context.meta)


def evaluate_accuracy(context: EvalContext, experiment: ExperimentType, kind: FingerprintKind,
                      skip: int, index_type: IndexType, noise: Optional[NoiseSpec],
                      seg_len: float) -> AccuracyRow:
    """
    Degrade every query excerpt, match its segments and count the outcomes.

    Each excerpt gets its own noise seed derived from the content id, so the degradations do
    not depend on cell order or thread count.

    :raises NoiseSkipped: If the degradation cannot run here (e.g. no transcoder).
    """
    index = context.index(kind, skip, index_type)
    fingerprinter = index.db.make_fingerprinter()
    cfg = context.settings.match.config_for(kind, skip, context.settings.pipeline)

    results: List[MatchResult] = []
    for query in context.queries():
        audio = query.audio
        if noise is not None and noise.kind is not NoiseKind.CLEAN:
            seed = derive_seed(noise.seed, "query", query.content_id, query.number)
            audio = apply_noise(audio, noise.with_seed(seed), context.settings.degrade)
        try:
            fingerprints = fingerprinter.fingerprint(audio)
            segments = segment_stream(fingerprints, seg_len, ground_truth=query.content_id)
        except SignalTooShortError as e:
            logger.debug("Query '%s' #%d yields no segment: %s", query.content_id,
                         query.number, e)
            continue
        results.extend(match_segments(segments, index, cfg))

    condition = noise.label if noise is not None else "clean"
    return _tally(experiment, kind, condition, skip, index_type, results, context)


def _white_noise(context: EvalContext) -> AudioBuffer:
    pipeline = context.settings.pipeline
    ev = context.settings.eval
    seconds = ev.false_positive_segments * ev.skip_seg_len
    n = int(np.ceil(seconds * pipeline.sample_rate)) + pipeline.window_samples
    rng = make_rng(context.spec.seed, "false_positive")
    samples = rng.normal(0.0, WHITE_NOISE_STD, n).astype(np.float32)
    return AudioBuffer(samples, pipeline.sample_rate)


def _false_positive(context: EvalContext, kind: FingerprintKind) -> AccuracyRow:
    spec = context.spec
    skip, index_type = spec.operating_skip(kind), spec.operating_index(kind)
    index = context.index(kind, skip, index_type)
    fingerprints = index.db.make_fingerprinter().fingerprint(_white_noise(context))
    ev = context.settings.eval
    segments = segment_stream(fingerprints, ev.skip_seg_len)[:ev.false_positive_segments]
    cfg = context.settings.match.config_for(kind, skip, context.settings.pipeline)
    results = match_segments(segments, index, cfg)
    return _tally(ExperimentType.FALSE_POSITIVE, kind, "white_noise", skip, index_type,
                  results, context)


def noise_cells(context: EvalContext) -> List[Cell]:
    spec = context.spec
    seg_len = context.settings.eval.noise_seg_len
    cells = []
    for noise in spec.noises:
        for kind in spec.kinds:
            skip, index_type = spec.operating_skip(kind), spec.operating_index(kind)
            cells.append(Cell(
                ExperimentType.NOISE, f"{kind.value} {noise.label}", AccuracyRow,
                lambda n=noise, k=kind, s=skip, t=index_type: [
                    evaluate_accuracy(context, ExperimentType.NOISE, k, s, t, n, seg_len)
                ],
            ))
    return cells


def skip_cells(context: EvalContext) -> List[Cell]:
    spec = context.spec
    seg_len = context.settings.eval.skip_seg_len
    cells = []
    for skip in spec.skips:
        for kind in spec.kinds:
            cells.append(Cell(
                ExperimentType.SKIP, f"{kind.value} skip {skip}", AccuracyRow,
                lambda k=kind, s=skip: [
                    evaluate_accuracy(context, ExperimentType.SKIP, k, s, IndexType.EXHAUSTIVE,
                                      spec.skip_noise, seg_len)
                ],
            ))
    return cells


def false_positive_cells(context: EvalContext) -> List[Cell]:
    return [Cell(ExperimentType.FALSE_POSITIVE, kind.value, AccuracyRow,
                 lambda k=kind: [_false_positive(context, k)])
            for kind in context.spec.kinds]


def _run(cells: List[Cell]) -> List[AccuracyRow]:
    rows: List[AccuracyRow] = []
    for cell in cells:
        try:
            rows.extend(cell.run())  # type: ignore[arg-type]
        except NoiseSkipped as e:
            logger.warning("Skipped %s: %s", cell.cell_id, e)
    return rows


def run_noise_experiment(context: EvalContext) -> List[AccuracyRow]:
    """
    Accuracy of every spec kind under every spec noise, at each kind's operating point.

    Cells whose degradation cannot run here are logged and left out.
    """
    return _run(noise_cells(context))


def run_skip_experiment(context: EvalContext) -> List[AccuracyRow]:
    """
    Exhaustive-search accuracy for every (skip, kind) under the experiment's light degradation.
    """
    return _run(skip_cells(context))


def run_false_positive_check(context: EvalContext) -> List[AccuracyRow]:
    """
    Match white-noise segments that are in no DB; `accuracy` is the rejection rate.
    """
    return _run(false_positive_cells(context))
