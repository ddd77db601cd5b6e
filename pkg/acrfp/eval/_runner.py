import asyncio
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Type

from ..core import AcrfpError, Dispatcher, ExitCode, NoiseSkipped
from ._accuracy import false_positive_cells, noise_cells, skip_cells
from ._cell import Cell
from ._context import EvalContext
from ._csv import merge_csv, write_rows
from ._events import (
    CellFailedEvent,
    CellFinishedEvent,
    CellSkippedEvent,
    CellStartedEvent,
    RunFinishedEvent,
    RunStartedEvent,
)
from ._experiment_spec import ExperimentSpec
from ._experiment_type import ExperimentType
from ._rows import AccuracyRow, CellRow, Row, SpeedRow, TemporalRow
from ._speed import speed_cells
from ._temporal import temporal_cells

__all__ = ("ExperimentRunner", "RunReport", "CellOutcome", "CellStatus", "ROW_TYPES",)

logger = logging.getLogger(__name__)

ROW_TYPES: Dict[ExperimentType, Type[Row]] = {
    ExperimentType.NOISE: AccuracyRow,
    ExperimentType.SKIP: AccuracyRow,
    ExperimentType.TEMPORAL: TemporalRow,
    ExperimentType.SPEED: SpeedRow,
    ExperimentType.FALSE_POSITIVE: AccuracyRow,
}

_PLANNERS: Dict[ExperimentType, Callable[[EvalContext], List[Cell]]] = {
    ExperimentType.NOISE: noise_cells,
    ExperimentType.SKIP: skip_cells,
    ExperimentType.TEMPORAL: temporal_cells,
    ExperimentType.SPEED: speed_cells,
    ExperimentType.FALSE_POSITIVE: false_positive_cells,
}


class CellStatus(Enum):
    PASSED = "passed"
    SKIPPED = "skipped"
    FAILED = "failed"


@dataclass(frozen=True)
class CellOutcome:
    cell: Cell
    status: CellStatus
    rows: List[Row] = field(default_factory=list)
    elapsed: float = 0.0
    reason: str = ""


@dataclass(frozen=True)
class RunReport:
    spec: ExperimentSpec
    outcomes: List[CellOutcome]
    files: Dict[ExperimentType, Path]
    elapsed: float

    def _count(self, status: CellStatus) -> int:
        return sum(1 for outcome in self.outcomes if outcome.status is status)

    @property
    def passed(self) -> int:
        return self._count(CellStatus.PASSED)

    @property
    def skipped(self) -> int:
        return self._count(CellStatus.SKIPPED)

    @property
    def failed(self) -> int:
        return self._count(CellStatus.FAILED)

    def rows(self, experiment: ExperimentType) -> List[Row]:
        return [row for outcome in self.outcomes if outcome.cell.experiment is experiment
                for row in outcome.rows]

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.FAILURE if self.failed else ExitCode.OK


class ExperimentRunner:
    """
    Runs the cells of an experiment spec in parallel and merges their CSVs.

    Each cell writes its rows to its own file under ``<out>/cells/``; once all cells are
    done, the files of each experiment are concatenated in plan order into
    ``<out>/<experiment>.csv``, so the merged reports do not depend on scheduling.
    ``<out>/cells.csv`` records the status of every cell.
    """

    def __init__(self, dispatcher: Dispatcher, *, threads: int = 1) -> None:
        self._dispatcher = dispatcher
        self._threads = max(threads, 1)

    def plan(self, context: EvalContext) -> List[Cell]:
        cells: List[Cell] = []
        for experiment in context.spec.experiments:
            cells.extend(_PLANNERS[experiment](context))
        return cells

    async def run(self, context: EvalContext) -> RunReport:
        spec = context.spec
        cells = self.plan(context)
        await self._dispatcher.fire(RunStartedEvent(spec, cells))
        started = time.perf_counter()

        paths = [self._cell_path(spec, cell, number) for number, cell in enumerate(cells)]
        semaphore = asyncio.Semaphore(self._threads)
        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            outcomes = await asyncio.gather(*(
                self._run_cell(cell, path, executor, semaphore)
                for cell, path in zip(cells, paths)
            ))

        files = self._merge(spec, list(outcomes), paths)
        report = RunReport(spec, list(outcomes), files, time.perf_counter() - started)
        await self._dispatcher.fire(RunFinishedEvent(report))
        return report

    def _cell_path(self, spec: ExperimentSpec, cell: Cell, number: int) -> Path:
        return spec.out_dir / "cells" / cell.experiment.value / f"{number:04d}.csv"

    def _execute(self, cell: Cell, path: Path) -> List[Row]:
        rows = list(cell.run())
        write_rows(path, cell.row_type, rows)
        return rows

    async def _run_cell(self, cell: Cell, path: Path, executor: ThreadPoolExecutor,
                        semaphore: asyncio.Semaphore) -> CellOutcome:
        async with semaphore:
            await self._dispatcher.fire(CellStartedEvent(cell))
            started = time.perf_counter()
            loop = asyncio.get_running_loop()
            try:
                rows = await loop.run_in_executor(executor, self._execute, cell, path)
            except NoiseSkipped as e:
                await self._dispatcher.fire(CellSkippedEvent(cell, str(e)))
                return CellOutcome(cell, CellStatus.SKIPPED, reason=str(e))
            except Exception as e:
                if not isinstance(e, AcrfpError):
                    logger.error("Cell %s crashed", cell.cell_id, exc_info=e)
                await self._dispatcher.fire(CellFailedEvent(cell, e))
                return CellOutcome(cell, CellStatus.FAILED, elapsed=time.perf_counter() - started,
                                   reason=str(e) or e.__class__.__name__)
            elapsed = time.perf_counter() - started
            await self._dispatcher.fire(CellFinishedEvent(cell, rows, elapsed))
            return CellOutcome(cell, CellStatus.PASSED, rows, elapsed)

    def _merge(self, spec: ExperimentSpec, outcomes: Sequence[CellOutcome],
               paths: Sequence[Path]) -> Dict[ExperimentType, Path]:
        files = {}
        for experiment in spec.experiments:
            out = spec.out_dir / f"{experiment.value}.csv"
            parts = [path for outcome, path in zip(outcomes, paths)
                     if outcome.cell.experiment is experiment
                     and outcome.status is CellStatus.PASSED]
            if parts:
                merge_csv(parts, out)
            else:
                write_rows(out, ROW_TYPES[experiment], [])
            files[experiment] = out

        statuses = [CellRow(o.cell.experiment.value, o.cell.name, o.status.value, o.elapsed,
                            o.reason) for o in outcomes]
        write_rows(spec.out_dir / "cells.csv", CellRow, statuses)
        return files
