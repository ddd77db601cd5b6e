from typing import Callable, Optional

from rich.console import Console
from rich.style import Style
from rich.table import Table

from ..core import Dispatcher, Subscriber, make_console
from ._events import (
    CellFailedEvent,
    CellFinishedEvent,
    CellSkippedEvent,
    RunFinishedEvent,
    RunStartedEvent,
)
from ._experiment_type import ExperimentType
from ._rows import AccuracyRow
from ._runner import RunReport

__all__ = ("RichReporter", "format_elapsed",)


def format_elapsed(elapsed: float) -> str:
    hours = int(elapsed // 3600)
    minutes = int((elapsed - hours * 3600) // 60)
    seconds = elapsed - hours * 3600 - minutes * 60

    formatted = f"{seconds:.2f}s" if elapsed < 60 else f"{int(seconds)}s"
    if (minutes > 0) or (hours > 0):
        formatted = f"{minutes}m {formatted}"
    if hours > 0:
        formatted = f"{hours}h {formatted}"
    return formatted


class RichReporter(Subscriber):
    """
    Prints cell progress as it happens and an accuracy table once the run ends.
    """

    def __init__(self, console_factory: Callable[[], Console] = make_console, *,
                 show_skip_reason: bool = True) -> None:
        self._console = console_factory()
        self._show_skip_reason = show_skip_reason
        self._experiment: Optional[ExperimentType] = None

    @property
    def console(self) -> Console:
        return self._console

    def subscribe(self, dispatcher: Dispatcher) -> None:
        dispatcher.listen(RunStartedEvent, self.on_run_started) \
                  .listen(CellFinishedEvent, self.on_cell_finished) \
                  .listen(CellSkippedEvent, self.on_cell_skipped) \
                  .listen(CellFailedEvent, self.on_cell_failed) \
                  .listen(RunFinishedEvent, self.on_run_finished)

    def on_run_started(self, event: RunStartedEvent) -> None:
        experiments = ", ".join(e.value for e in event.spec.experiments)
        self._console.out(f"Experiments: {experiments} ({len(event.cells)} cells)")

    def _print_experiment(self, experiment: ExperimentType) -> None:
        if experiment is not self._experiment:
            self._experiment = experiment
            self._console.out(f"* {experiment.value.replace('_', ' ')}",
                              style=Style(bold=True))

    def on_cell_finished(self, event: CellFinishedEvent) -> None:
        self._print_experiment(event.cell.experiment)
        self._console.out(f" ✔ {event.cell.name}", style=Style(color="green"), end="")
        self._console.out(f" ({format_elapsed(event.elapsed)})", style=Style(color="grey50"))

    def on_cell_skipped(self, event: CellSkippedEvent) -> None:
        self._print_experiment(event.cell.experiment)
        self._console.out(f" ○ {event.cell.name}", style=Style(color="grey70"))
        if self._show_skip_reason and event.reason:
            self._console.out(f"   |> {event.reason}", style=Style(color="grey50"))

    def on_cell_failed(self, event: CellFailedEvent) -> None:
        self._print_experiment(event.cell.experiment)
        self._console.out(f" ✗ {event.cell.name}", style=Style(color="red"))
        reason = str(event.error) or event.error.__class__.__name__
        self._console.out(f"   |> {reason}", style=Style(color="yellow"))

    def on_run_finished(self, event: RunFinishedEvent) -> None:
        report = event.report
        self._console.out(" ")
        table = self._accuracy_table(report)
        if table is not None:
            self._console.print(table)
        for experiment, path in report.files.items():
            self._console.out(f"# {experiment.value}: {path}", style=Style(color="grey70"))
        self.print_report_stats(report)

    def _accuracy_table(self, report: RunReport) -> Optional[Table]:
        rows = [row for experiment in (ExperimentType.NOISE, ExperimentType.SKIP,
                                       ExperimentType.FALSE_POSITIVE)
                for row in report.rows(experiment) if isinstance(row, AccuracyRow)]
        if not rows:
            return None
        table = Table(title="Accuracy")
        for column in ("experiment", "kind", "condition", "skip", "index"):
            table.add_column(column)
        table.add_column("accuracy %", justify="right")
        table.add_column("segments", justify="right")
        for row in rows:
            table.add_row(row.experiment, row.kind, row.condition, str(row.skip), row.index,
                          f"{row.accuracy:.2f}", str(row.n_segments))
        return table

    def print_report_stats(self, report: RunReport) -> None:
        if report.failed > 0 or report.passed == 0:
            style = Style(color="red", bold=True)
        else:
            style = Style(color="green", bold=True)
        total = len(report.outcomes)
        cells = "cell" if (total == 1) else "cells"
        self._console.out(f"# {total} {cells}, {report.passed} passed, "
                          f"{report.failed} failed, {report.skipped} skipped",
                          style=style, end="")
        self._console.out(f" ({format_elapsed(report.elapsed)})", style=Style(color="blue"))
