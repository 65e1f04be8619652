"""Experiment orchestration: configuration, run execution, aggregation,
reporting and the command-line interface."""

from __future__ import annotations

from .aggregate import METRICS, PHASES, MissingRunsError, aggregate
from .config import ExperimentConfig, RunSpec
from .report import write_reports
from .runner import RunRecord, execute_run, run_experiment, write_run

__all__ = [
    "ExperimentConfig", "METRICS", "MissingRunsError", "PHASES", "RunRecord",
    "RunSpec", "aggregate", "execute_run", "run_experiment", "write_reports",
    "write_run",
]
