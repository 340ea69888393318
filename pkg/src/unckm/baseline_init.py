"""Baseline initializers: uniform random, k-means++ and Maxmin.

All three pick centers among the data points and keep D(x), the distance
from each point to its nearest chosen center, with one new-center distance
per point per round.

Random draws use the generator passed in (see :mod:`unckm.rng`) in a fixed
way so results are reproducible:

* uniform random: ``rng.permutation(n)``, indices taken in that order,
  skipping any point at an already-held position;
* first center of k-means++ / Maxmin: ``rng.integers(n)``;
* k-means++ next center: ``u = rng.random() * total`` inverted through the
  cumulative sum of D(x)^2 (``searchsorted(..., side="right")``).
"""

from __future__ import annotations

import numpy as np

from .dataset import Dataset
from .errors import InsufficientDistinctPoints
from .rng import as_generator
from .seeds import Seeds, check_k


def _sq_dist_to(X: np.ndarray, c: np.ndarray) -> np.ndarray:
    diff = X - c
    return np.einsum("ij,ij->i", diff, diff)


def random_init(dataset: Dataset, k: int, rng) -> Seeds:
    """k data points drawn uniformly without replacement, at k distinct positions."""
    check_k(dataset, k)
    rng = as_generator(rng)
    X = dataset.points
    chosen: list[int] = []
    held: set[bytes] = set()
    for i in rng.permutation(dataset.n):
        key = (X[i] + 0.0).tobytes()  # -0.0 and 0.0 are one position
        if key in held:
            continue
        held.add(key)
        chosen.append(int(i))
        if len(chosen) == k:
            break
    return Seeds.from_indices(dataset, chosen, "random")


def kmeanspp_init(dataset: Dataset, k: int, rng, first_index: int | None = None) -> Seeds:
    """k-means++ seeding: each next center drawn with probability D(x)^2 / sum D^2.

    Args:
        first_index: fix the first center instead of drawing it (for tests).
    """
    check_k(dataset, k)
    rng = as_generator(rng)
    X = dataset.points
    first = int(rng.integers(dataset.n)) if first_index is None else int(first_index)
    chosen = [first]
    d2 = _sq_dist_to(X, X[first])
    while len(chosen) < k:
        cum = np.cumsum(d2)
        total = cum[-1]
        if not total > 0:
            raise InsufficientDistinctPoints("every point coincides with a chosen center")
        u = rng.random() * total
        i = int(np.searchsorted(cum, u, side="right"))
        if i >= dataset.n:  # u rounded up to total
            i = int(np.flatnonzero(d2 > 0)[-1])
        chosen.append(i)
        d2 = np.minimum(d2, _sq_dist_to(X, X[i]))
    return Seeds.from_indices(dataset, chosen, "kmeanspp")


def maxmin_init(dataset: Dataset, k: int, rng, first_index: int | None = None) -> Seeds:
    """Maxmin (farthest-first) seeding: random first center, then argmax of D(x).

    Ties go to the lowest index. ``first_index`` pins the first center.
    """
    check_k(dataset, k)
    rng = as_generator(rng)
    X = dataset.points
    first = int(rng.integers(dataset.n)) if first_index is None else int(first_index)
    chosen = [first]
    d2 = _sq_dist_to(X, X[first])
    while len(chosen) < k:
        i = int(np.argmax(d2))
        if not d2[i] > 0:
            raise InsufficientDistinctPoints("every point coincides with a chosen center")
        chosen.append(i)
        d2 = np.minimum(d2, _sq_dist_to(X, X[i]))
    return Seeds.from_indices(dataset, chosen, "maxmin")
