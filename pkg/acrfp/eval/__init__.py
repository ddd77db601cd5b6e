from ._accuracy import (
    WHITE_NOISE_STD,
    evaluate_accuracy,
    false_positive_cells,
    noise_cells,
    run_false_positive_check,
    run_noise_experiment,
    run_skip_experiment,
    skip_cells,
)
from ._cell import Cell
from ._context import EvalContext, QueryClip
from ._csv import merge_csv, write_rows
from ._eval_settings import EvalSettings
from ._events import (
    CellFailedEvent,
    CellFinishedEvent,
    CellSkippedEvent,
    CellStartedEvent,
    RunFinishedEvent,
    RunStartedEvent,
)
from ._experiment_spec import (
    DEFAULT_SKIP_NOISE,
    DEFAULT_SKIPS,
    ExperimentSpec,
    experiment_spec_from_dict,
    load_experiment_spec,
)
from ._experiment_type import ExperimentType
from ._rich_reporter import RichReporter, format_elapsed
from ._rows import AccuracyRow, CellRow, Row, RowMeta, SpeedRow, TemporalRow, row_fields
from ._runner import ROW_TYPES, CellOutcome, CellStatus, ExperimentRunner, RunReport
from ._silent_reporter import SilentReporter
from ._speed import run_speed_experiment, speed_cells, speed_configurations
from ._synth import synthesize_clip, synthesize_corpus
from ._temporal import (
    DEFAULT_LAGS,
    MIN_FINGERPRINTS,
    DistanceMatrix,
    distance_matrix,
    fingerprint_distances,
    normalize_min_max,
    run_temporal_experiment,
    save_distance_matrix,
    temporal_cells,
)

__all__ = ("EvalSettings", "ExperimentType", "ExperimentSpec", "load_experiment_spec",
           "experiment_spec_from_dict", "DEFAULT_SKIPS", "DEFAULT_SKIP_NOISE",
           "RowMeta", "Row", "AccuracyRow", "TemporalRow", "SpeedRow", "CellRow", "row_fields",
           "write_rows", "merge_csv", "Cell", "EvalContext", "QueryClip",
           "evaluate_accuracy", "noise_cells", "skip_cells", "false_positive_cells",
           "run_noise_experiment", "run_skip_experiment", "run_false_positive_check",
           "WHITE_NOISE_STD", "DistanceMatrix", "distance_matrix", "fingerprint_distances",
           "normalize_min_max", "save_distance_matrix", "temporal_cells",
           "run_temporal_experiment", "MIN_FINGERPRINTS", "DEFAULT_LAGS",
           "speed_configurations", "speed_cells", "run_speed_experiment",
           "synthesize_clip", "synthesize_corpus", "RunStartedEvent", "CellStartedEvent",
           "CellFinishedEvent", "CellSkippedEvent", "CellFailedEvent", "RunFinishedEvent",
           "ExperimentRunner", "RunReport", "CellOutcome", "CellStatus", "ROW_TYPES",
           "RichReporter", "SilentReporter", "format_elapsed",)
