"""Lloyd's iteration: assign to nearest center, move centers to means, repeat."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Assignment, Dataset, cluster_means, ssedm
from .errors import ContractViolation, DimensionError
from .seeds import Seeds

DEFAULT_MAX_ITER = 300


@dataclass(frozen=True)
class ClusteringResult:
    """Outcome of :func:`run_lloyd`.

    ``history`` holds the SSEDM of the assignment after every round,
    starting with the assignment to the seeds.
    """

    centers: np.ndarray
    assignment: Assignment
    ssedm: float
    iterations: int
    converged: bool
    history: tuple[float, ...] = field(default=(), compare=False)


def _as_centers(centers, m: int) -> np.ndarray:
    C = np.asarray(centers, dtype=np.float64)
    if C.ndim == 1:
        C = C.reshape(-1, 1) if m == 1 else C.reshape(1, -1)
    if C.ndim != 2 or C.shape[0] == 0:
        raise ContractViolation("need at least one center")
    if C.shape[1] != m:
        raise DimensionError(f"centers have {C.shape[1]} coordinates, points have {m}")
    return C


def sq_distances(X: np.ndarray, C: np.ndarray) -> np.ndarray:
    """``(n, k)`` squared distances, computed one center at a time."""
    D = np.empty((X.shape[0], C.shape[0]))
    for j, c in enumerate(C):
        diff = X - c
        D[:, j] = np.einsum("ij,ij->i", diff, diff)
    return D


def assign(dataset: Dataset, centers) -> Assignment:
    """Label each point with its nearest center; ties go to the lower center index."""
    C = _as_centers(centers, dataset.m)
    labels = np.argmin(sq_distances(dataset.points, C), axis=1)
    return Assignment(labels, C.shape[0])


def update_centers(dataset: Dataset, assignment: Assignment, old_centers) -> np.ndarray:
    """Means of each cluster.

    An empty cluster gets its center moved to the point farthest from its own
    (old) center; that point is then excluded from further repairs in the
    same round.  Ties go to the lowest point index.
    """
    X = dataset.points
    k = assignment.k
    C_old = _as_centers(old_centers, dataset.m)
    if C_old.shape[0] != k:
        raise ContractViolation(f"{C_old.shape[0]} old centers for k={k}")
    labels = assignment.labels
    means, counts = cluster_means(X, labels, k)
    empty = np.flatnonzero(counts == 0)
    if empty.size:
        diff = X - C_old[labels]
        far = np.einsum("ij,ij->i", diff, diff)
        for j in empty:
            i = int(np.argmax(far))
            means[j] = X[i]
            far[i] = -np.inf
    return means


def run_lloyd(dataset: Dataset, seeds, max_iter: int = DEFAULT_MAX_ITER) -> ClusteringResult:
    """Refine ``seeds`` until an assignment round changes no label.

    Args:
        dataset: points to cluster.
        seeds: a :class:`Seeds` or a ``(k, m)`` array of starting centers.
        max_iter: maximum number of update+assign rounds.

    Returns:
        Result whose centers are the means of the final assignment.  Stopping
        at ``max_iter`` sets ``converged=False``.
    """
    if max_iter < 1:
        raise ContractViolation(f"max_iter must be >= 1, got {max_iter}")
    C = seeds.centers if isinstance(seeds, Seeds) else seeds
    C = _as_centers(C, dataset.m).copy()
    if C.shape[0] > dataset.n:
        raise ContractViolation(f"{C.shape[0]} centers for {dataset.n} points")

    current = assign(dataset, C)
    history = [ssedm(dataset, current)]
    converged = False
    iterations = 0
    while iterations < max_iter:
        iterations += 1
        C = update_centers(dataset, current, C)
        nxt = assign(dataset, C)
        history.append(ssedm(dataset, nxt))
        if nxt == current:
            converged = True
            break
        current = nxt

    means, counts = cluster_means(dataset.points, current.labels, current.k)
    final = np.where(counts[:, None] > 0, means, C)
    return ClusteringResult(
        centers=final,
        assignment=current,
        ssedm=ssedm(dataset, current),
        iterations=iterations,
        converged=converged,
        history=tuple(history),
    )
