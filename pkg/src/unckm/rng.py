"""Reproducible per-run random streams.

Every run draws from ``numpy.random.Generator(PCG64(SeedSequence([base_seed, run_index])))``.
PCG64 and SeedSequence are specified by numpy and produce the same stream
on every platform, and adding runs never changes the streams of earlier runs.
"""

from __future__ import annotations

import numpy as np

UINT64_MAX = 2**64 - 1


def rng_stream(base_seed: int, run_index: int = 0) -> np.random.Generator:
    """Independent generator for run ``run_index`` of an experiment seeded ``base_seed``."""
    if not 0 <= base_seed <= UINT64_MAX:
        raise ValueError(f"base_seed must fit in 64 unsigned bits, got {base_seed}")
    if run_index < 0:
        raise ValueError(f"run_index must be non-negative, got {run_index}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([base_seed, run_index])))


def as_generator(rng) -> np.random.Generator:
    """Accept a Generator, an integer base seed, or None (fresh OS entropy)."""
    if isinstance(rng, np.random.Generator):
        return rng
    if rng is None:
        return np.random.default_rng()
    return rng_stream(int(rng))
