from dataclasses import dataclass, field
from typing import Callable, Sequence, Type

from ._experiment_type import ExperimentType
from ._rows import Row

__all__ = ("Cell",)


@dataclass(frozen=True)
class Cell:
    """
    One independently runnable unit of an experiment, producing rows of `row_type`.

    `run` may raise `NoiseSkipped` when the cell cannot be measured in this environment.
    """

    experiment: ExperimentType
    name: str
    row_type: Type[Row]
    run: Callable[[], Sequence[Row]] = field(compare=False, repr=False)

    @property
    def cell_id(self) -> str:
        return f"{self.experiment.value}/{self.name}"
