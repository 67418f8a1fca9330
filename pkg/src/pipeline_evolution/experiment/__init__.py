"""Benchmark harness: data ingestion, experimental arms, replicated runs, reports and pipeline export."""

from ._baseline import DEFAULT_TREES, OUTER_HOLDOUT_FRACTION, HoldoutScore, rf_pipeline, run_rf_baseline, score_on_holdout
from ._export import export_pipeline, read_run, write_pipeline
from ._factory import ExperimentFactory
from ._load import encode_labels, load_csv
from ._report import REPORT_FORMAT, ArmSummary, ExperimentReport, ReplicateRecord, notch_interval
from ._run import ExperimentOutcome, check_holdout, run_experiment, write_outcome
from ._spec import PRESETS, Arm, CsvSource, DataSource, EpistasisSource, ExperimentSpec, HillValleySource, Preset

__all__ = [
    "DEFAULT_TREES",
    "OUTER_HOLDOUT_FRACTION",
    "PRESETS",
    "REPORT_FORMAT",
    "Arm",
    "ArmSummary",
    "CsvSource",
    "DataSource",
    "EpistasisSource",
    "ExperimentFactory",
    "ExperimentOutcome",
    "ExperimentReport",
    "ExperimentSpec",
    "HillValleySource",
    "HoldoutScore",
    "Preset",
    "ReplicateRecord",
    "check_holdout",
    "encode_labels",
    "export_pipeline",
    "load_csv",
    "notch_interval",
    "read_run",
    "rf_pipeline",
    "run_experiment",
    "run_rf_baseline",
    "score_on_holdout",
    "write_outcome",
    "write_pipeline",
]
