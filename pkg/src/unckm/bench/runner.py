from __future__ import annotations

import logging
import time
from pathlib import Path

import numpy as np

from .. import __version__, iris_path
from ..baseline_init import kmeanspp_init, maxmin_init, random_init
from ..dataset import Dataset, load_csv
from ..errors import UnckmError
from ..lloyd import run_lloyd
from ..rng import rng_stream
from ..unc_init import select_seeds_unc
from .config import BUILTIN_PREFIX, ExperimentConfig
from .report import ExperimentReport, MethodReport, RunRecord

log = logging.getLogger(__name__)

BUILTIN = {"iris": iris_path}

SEEDERS = {
    "random": random_init,
    "kmeanspp": kmeanspp_init,
    "maxmin": maxmin_init,
    "unc": lambda dataset, k, rng: select_seeds_unc(dataset, k),
}


class ExperimentError(UnckmError):
    pass


def resolve_path(spec: str) -> Path:
    if spec.startswith(BUILTIN_PREFIX):
        key = spec[len(BUILTIN_PREFIX):]
        if key not in BUILTIN:
            raise ExperimentError(f"no built-in dataset {key!r}; have {', '.join(BUILTIN)}")
        return Path(str(BUILTIN[key]()))
    return Path(spec)


def scale(dataset: Dataset, mode: str) -> Dataset:
    """Column-wise min-max or z-score scaling; constant columns map to 0."""
    if mode == "none":
        return dataset
    X = dataset.points
    if mode == "minmax":
        lo = X.min(axis=0)
        span = X.max(axis=0) - lo
        Y = np.divide(X - lo, span, out=np.zeros_like(X), where=span > 0)
    elif mode == "zscore":
        mu = X.mean(axis=0)
        sd = X.std(axis=0)
        Y = np.divide(X - mu, sd, out=np.zeros_like(X), where=sd > 0)
    else:
        raise ValueError(f"unknown scaling {mode!r}")
    return Dataset(Y, name=dataset.name, checksum=dataset.checksum)


def load_dataset(config: ExperimentConfig) -> Dataset:
    path = resolve_path(config.dataset_path)
    ds = load_csv(
        path,
        has_header=config.has_header,
        drop_columns=config.drop_columns,
        delimiter=config.delimiter,
        name=config.name,
    )
    return scale(ds, config.scale)


def run_experiment(config: ExperimentConfig, dataset: Dataset | None = None) -> ExperimentReport:
    """Run every configured initializer ``config.runs`` times, each followed by Lloyd.

    Run ``r`` of every stochastic initializer draws from
    ``rng_stream(config.base_seed, r)``.  Wall time covers seeding plus Lloyd.

    Args:
        dataset: use this instead of loading ``config.dataset_path``.
    """
    if dataset is None:
        try:
            dataset = load_dataset(config)
        except (OSError, UnckmError) as e:
            raise ExperimentError(f"loading {config.dataset_path}: {e}") from e

    methods = []
    for name in config.initializers:
        seeder = SEEDERS[name]
        records = []
        for r in range(config.runs):
            t0 = time.perf_counter()
            try:
                seeds = seeder(dataset, config.k, rng_stream(config.base_seed, r))
                result = run_lloyd(dataset, seeds, config.max_iter)
            except UnckmError as e:
                raise ExperimentError(f"{name} run {r} on {dataset.name}: {e}") from e
            elapsed = time.perf_counter() - t0
            if not result.converged:
                log.warning("%s run %d hit max_iter=%d", name, r, config.max_iter)
            records.append(RunRecord(
                run_index=r,
                ssedm=result.ssedm,
                iterations=result.iterations,
                converged=result.converged,
                seconds=elapsed,
                seed_indices=list(seeds.source_indices),
            ))
        methods.append(MethodReport(name, records))
        log.info("%s: mean ssedm %.6g over %d runs", name, methods[-1].summary["ssedm_mean"], config.runs)

    return ExperimentReport(
        dataset={
            "name": dataset.name,
            "checksum": dataset.checksum or dataset.content_hash(),
            "n": dataset.n,
            "m": dataset.m,
        },
        config=config.echo(),
        methods=methods,
        artifact_version=__version__,
    )
