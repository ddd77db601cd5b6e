import time
from dataclasses import replace
from typing import List, Tuple

import numpy as np

from ..fingerprint import FingerprintKind
from ..index import IndexType, bench_fps, build_index, encode_index
from ..refdb import encode_db
from ._cell import Cell
from ._context import EvalContext
from ._experiment_type import ExperimentType
from ._rows import SpeedRow

__all__ = ("speed_configurations", "speed_cells", "run_speed_experiment",)


def speed_configurations(context: EvalContext) -> List[Tuple[FingerprintKind, int, IndexType]]:
    """
    Min-hash with exhaustive Hamming search at its skip, the proposed fingerprint with its
    index at its skip, and the proposed fingerprint searched exhaustively as a control.
    """
    spec = context.spec
    configurations = []
    if FingerprintKind.MINHASH in spec.kinds:
        configurations.append((FingerprintKind.MINHASH, spec.minhash_skip, IndexType.EXHAUSTIVE))
    if FingerprintKind.PROPOSED in spec.kinds:
        configurations.append((FingerprintKind.PROPOSED, spec.proposed_skip,
                               spec.proposed_index))
        if spec.proposed_index is not IndexType.EXHAUSTIVE:
            configurations.append((FingerprintKind.PROPOSED, spec.proposed_skip,
                                   IndexType.EXHAUSTIVE))
    return configurations


def _query_values(context: EvalContext, kind: FingerprintKind) -> np.ndarray:
    fingerprinter = context.fingerprinter(kind)
    return np.concatenate([fingerprinter.fingerprint(q.audio).values
                           for q in context.queries()])


def _speed_row(context: EvalContext, kind: FingerprintKind, skip: int,
               index_type: IndexType) -> SpeedRow:
    db = context.db(kind, skip)
    started = time.perf_counter()
    index = build_index(db, replace(context.settings.index, type=index_type))
    build_seconds = time.perf_counter() - started

    ev = context.settings.eval
    result = bench_fps(index, _query_values(context, kind), context.settings.match.top_k,
                       runs=ev.bench_runs, min_queries=ev.bench_queries)
    return SpeedRow(kind.value, index_type.value, skip, len(db), result.fps, build_seconds,
                    len(encode_db(db)), len(encode_index(index)), result.n_queries,
                    result.threads, context.meta)


def speed_cells(context: EvalContext) -> List[Cell]:
    return [Cell(ExperimentType.SPEED, f"{kind.value} {index_type.value} skip {skip}",
                 SpeedRow, lambda k=kind, s=skip, t=index_type: [_speed_row(context, k, s, t)])
            for kind, skip, index_type in speed_configurations(context)]


def run_speed_experiment(context: EvalContext) -> List[SpeedRow]:
    """
    Throughput in fingerprints per second, index build time and storage size.

    Timings depend on the machine; everything else in the rows is deterministic.
    """
    rows: List[SpeedRow] = []
    for cell in speed_cells(context):
        rows.extend(cell.run())  # type: ignore[arg-type]
    return rows
