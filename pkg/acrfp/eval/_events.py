from typing import TYPE_CHECKING, Sequence

from ..core import Event
from ._cell import Cell
from ._experiment_spec import ExperimentSpec
from ._rows import Row

if TYPE_CHECKING:
    from ._runner import RunReport

__all__ = ("RunStartedEvent", "CellStartedEvent", "CellFinishedEvent", "CellSkippedEvent",
           "CellFailedEvent", "RunFinishedEvent",)


class RunStartedEvent(Event):
    def __init__(self, spec: ExperimentSpec, cells: Sequence[Cell]) -> None:
        self._spec = spec
        self._cells = list(cells)

    @property
    def spec(self) -> ExperimentSpec:
        return self._spec

    @property
    def cells(self) -> Sequence[Cell]:
        return self._cells

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(<ExperimentSpec>, cells={len(self._cells)})"


class _CellEvent(Event):
    def __init__(self, cell: Cell) -> None:
        self._cell = cell

    @property
    def cell(self) -> Cell:
        return self._cell

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self._cell.cell_id!r})"


class CellStartedEvent(_CellEvent):
    pass


class CellFinishedEvent(_CellEvent):
    def __init__(self, cell: Cell, rows: Sequence[Row], elapsed: float) -> None:
        super().__init__(cell)
        self._rows = list(rows)
        self._elapsed = elapsed

    @property
    def rows(self) -> Sequence[Row]:
        return self._rows

    @property
    def elapsed(self) -> float:
        return self._elapsed


class CellSkippedEvent(_CellEvent):
    def __init__(self, cell: Cell, reason: str) -> None:
        super().__init__(cell)
        self._reason = reason

    @property
    def reason(self) -> str:
        return self._reason


class CellFailedEvent(_CellEvent):
    def __init__(self, cell: Cell, error: BaseException) -> None:
        super().__init__(cell)
        self._error = error

    @property
    def error(self) -> BaseException:
        return self._error


class RunFinishedEvent(Event):
    def __init__(self, report: "RunReport") -> None:
        self._report = report

    @property
    def report(self) -> "RunReport":
        return self._report

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(<RunReport>)"
