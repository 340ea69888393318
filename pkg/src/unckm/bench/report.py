"""Experiment reports and their JSON / CSV serializations."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path

SCHEMA_VERSION = 1
TIMING_FIELDS = ("seconds", "seconds_mean")


@dataclass
class RunRecord:
    run_index: int
    ssedm: float
    iterations: int
    converged: bool
    seconds: float
    seed_indices: list[int]


def summarize(runs: list[RunRecord]) -> dict:
    """Aggregate statistics of a method's runs (population std)."""
    vals = [r.ssedm for r in runs]
    n = len(vals)
    mean = math.fsum(vals) / n
    var = math.fsum((v - mean) ** 2 for v in vals) / n
    return {
        "ssedm_mean": mean,
        "ssedm_std": math.sqrt(var),
        "ssedm_min": min(vals),
        "ssedm_max": max(vals),
        "iter_mean": math.fsum(r.iterations for r in runs) / n,
        "seconds_mean": math.fsum(r.seconds for r in runs) / n,
    }


@dataclass
class MethodReport:
    name: str
    runs: list[RunRecord]
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary and self.runs:
            self.summary = summarize(self.runs)


@dataclass
class ExperimentReport:
    dataset: dict
    config: dict
    methods: list[MethodReport]
    artifact_version: str
    schema: int = SCHEMA_VERSION

    def method(self, name: str) -> MethodReport:
        for m in self.methods:
            if m.name == name:
                return m
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "artifact_version": self.artifact_version,
            "dataset": self.dataset,
            "config": self.config,
            "methods": [asdict(m) for m in self.methods],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentReport":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        methods = [
            MethodReport(m["name"], [RunRecord(**r) for r in m["runs"]], m["summary"])
            for m in d["methods"]
        ]
        return cls(d["dataset"], d["config"], methods, d["artifact_version"], d["schema"])

    def summary_table(self) -> str:
        """Plain-text table: one row per method, mean SSEDM and mean seconds."""
        head = f"{'method':<10} {'ssedm_mean':>12} {'ssedm_std':>11} {'ssedm_min':>11} {'iter_mean':>9} {'seconds_mean':>12}"
        lines = [f"{self.dataset['name']} (n={self.dataset['n']}, m={self.dataset['m']}, k={self.config['k']}, runs={self.config['runs']})", head]
        for m in self.methods:
            s = m.summary
            lines.append(
                f"{m.name:<10} {s['ssedm_mean']:>12.6g} {s['ssedm_std']:>11.4g} "
                f"{s['ssedm_min']:>11.6g} {s['iter_mean']:>9.2f} {s['seconds_mean']:>12.3e}"
            )
        return "\n".join(lines)


def strip_timing(obj):
    """Copy of a report dict with every wall-time field removed."""
    if isinstance(obj, dict):
        return {k: strip_timing(v) for k, v in obj.items() if k not in TIMING_FIELDS}
    if isinstance(obj, list):
        return [strip_timing(v) for v in obj]
    return obj


DETAIL_HEADER = ["method", "run_index", "ssedm", "iterations", "converged", "seconds", "seed_indices"]
SUMMARY_HEADER = ["method", "ssedm_mean", "seconds_mean", "ssedm_std", "ssedm_min", "ssedm_max", "iter_mean"]


def write_report(report: ExperimentReport, format: str, path) -> None:
    """Write ``report`` as ``"json"`` (full nested) or ``"csv"`` (runs, then summary block).

    Raises:
        OSError: the path cannot be written; the message names the path.
    """
    path = Path(path)
    try:
        if format == "json":
            path.write_text(json.dumps(report.to_dict(), indent=2) + "\n")
        elif format == "csv":
            with path.open("w", newline="") as f:
                w = csv.writer(f)
                w.writerow(DETAIL_HEADER)
                for m in report.methods:
                    for r in m.runs:
                        w.writerow([
                            m.name, r.run_index, repr(r.ssedm), r.iterations,
                            r.converged, repr(r.seconds),
                            " ".join(map(str, r.seed_indices)),
                        ])
                w.writerow([])
                w.writerow(SUMMARY_HEADER)
                for m in report.methods:
                    w.writerow([m.name] + [repr(m.summary[c]) for c in SUMMARY_HEADER[1:]])
        else:
            raise ValueError(f"unknown report format {format!r}")
    except OSError as e:
        raise OSError(e.errno, f"cannot write report to {path}: {e.strerror}") from e


def read_report(path) -> ExperimentReport:
    """Load a JSON report written by :func:`write_report`."""
    return ExperimentReport.from_dict(json.loads(Path(path).read_text()))
