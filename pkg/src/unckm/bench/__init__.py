from .config import INITIALIZERS, PRESETS, ExperimentConfig
from .report import ExperimentReport, MethodReport, RunRecord, read_report, write_report
from .runner import run_experiment

__all__ = [
    "INITIALIZERS", "PRESETS", "ExperimentConfig", "ExperimentReport",
    "MethodReport", "RunRecord", "read_report", "run_experiment", "write_report",
]
