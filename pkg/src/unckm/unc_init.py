"""Useful-nearest-center (UNC) seeding.

A chosen center C is *useless* for a point P when some other center C_x is
both closer to P than C is, and closer to C than P is.  Every other center
is *useful* for P.  Seeding starts from the point with the smallest first
coordinate and then repeatedly takes the point maximizing

    mean(d) / max(d) * sum(log(d)),   d = distances from P to its useful centers.

Each point's useful set is maintained incrementally: a new center that is
useless with respect to the current useful members is ignored; otherwise it
joins the set and the members it now dominates leave.  Because dominance is
not transitive this can keep a center that the exact definition (checked
against *all* centers) would drop, so the incremental set is a superset of
:func:`unc_exact`.  The incremental path is what :func:`select_seeds_unc`
uses; :func:`unc_exact` is kept as a reference.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .dataset import Dataset, as_point, distance, row_distances
from .errors import ContractViolation, DimensionError
from .seeds import Seeds, check_k

METHOD = "unc"


def is_useless(P, C, others: Sequence) -> bool:
    """True if some center in ``others`` makes C useless for P.

    That is, some C_x with ``dis(P, C_x) < dis(P, C)`` and
    ``dis(C, C_x) < dis(P, C)``; both inequalities strict.
    """
    d_pc = distance(P, C)
    for Cx in others:
        if distance(P, Cx) < d_pc and distance(C, Cx) < d_pc:
            return True
    return False


def unc_exact(P, centers: Sequence) -> set[int]:
    """Indices of centers useful for P, checked against every other center."""
    P = as_point(P)
    C = [as_point(c) for c in centers]
    if not C:
        raise ContractViolation("unc_exact needs at least one center")
    k = len(C)
    # distances computed once; comparisons follow is_useless exactly
    d_p = [distance(P, c) for c in C]
    d_cc = [[distance(C[i], C[j]) for j in range(k)] for i in range(k)]
    useful = set()
    for i in range(k):
        if not any(
            d_p[j] < d_p[i] and d_cc[i][j] < d_p[i] for j in range(k) if j != i
        ):
            useful.add(i)
    return useful


def unc_score(unc_distances: Sequence[float]) -> float:
    """Selection score of a point from the distances to its useful centers."""
    d = np.asarray(unc_distances, dtype=np.float64).reshape(-1)
    if d.size == 0:
        raise ContractViolation("score needs at least one useful-center distance")
    if np.any(d <= 0) or not np.all(np.isfinite(d)):
        raise ContractViolation("useful-center distances must be finite and > 0")
    return float(np.mean(d) / np.max(d) * np.sum(np.log(d)))


class UncState:
    """Useful-center sets of every data point, with cached distances.

    Stored densely: ``dist[:, j]`` holds the distance of every point to center
    j and ``useful[:, j]`` marks membership of j in each point's useful set.
    Columns are preallocated up to ``capacity`` and grown on demand.
    """

    def __init__(self, points: np.ndarray, capacity: int = 8):
        self.points = np.asarray(points, dtype=np.float64)
        if self.points.ndim != 2:
            raise DimensionError("points must be an (n, m) array")
        n = self.points.shape[0]
        capacity = max(int(capacity), 1)
        self.dist = np.zeros((n, capacity))
        self.useful = np.zeros((n, capacity), dtype=bool)
        self.centers: list[np.ndarray] = []
        self._cc: list[list[float]] = []  # center-to-center distances

    @property
    def n_centers(self) -> int:
        return len(self.centers)

    def _grow(self):
        n, cap = self.dist.shape
        self.dist = np.hstack([self.dist, np.zeros((n, cap))])
        self.useful = np.hstack([self.useful, np.zeros((n, cap), dtype=bool)])

    def add(self, center) -> "UncState":
        """Add a center and update every point's useful set in place."""
        c = as_point(center)
        if c.size != self.points.shape[1]:
            raise DimensionError(f"center has {c.size} coordinates, points have {self.points.shape[1]}")
        j = self.n_centers
        if j == self.dist.shape[1]:
            self._grow()

        d_new = row_distances(self.points, c)
        cc = row_distances(np.array(self.centers), c) if j else np.empty(0)

        if j:
            members = self.useful[:, :j]
            d_old = self.dist[:, :j]
            # new center is dominated by a current member
            ignored = np.any(
                members & (d_old < d_new[:, None]) & (cc[None, :] < d_new[:, None]),
                axis=1,
            )
            accepted = ~ignored
            # members now dominated by the new center
            dropped = members & (d_new[:, None] < d_old) & (cc[None, :] < d_old)
            members[accepted] &= ~dropped[accepted]
        else:
            accepted = np.ones(self.points.shape[0], dtype=bool)

        self.dist[:, j] = d_new
        self.useful[:, j] = accepted
        for row, dcc in zip(self._cc, cc):
            row.append(float(dcc))
        self._cc.append([*map(float, cc), 0.0])
        self.centers.append(c)
        return self

    def useful_set(self, i: int) -> set[int]:
        return set(np.flatnonzero(self.useful[i, : self.n_centers]).tolist())

    def useful_sets(self) -> list[set[int]]:
        k = self.n_centers
        return [set(np.flatnonzero(row).tolist()) for row in self.useful[:, :k]]

    def useful_distances(self, i: int) -> np.ndarray:
        k = self.n_centers
        return self.dist[i, :k][self.useful[i, :k]]

    def center_distance(self, a: int, b: int) -> float:
        return self._cc[a][b]

    def scores(self) -> np.ndarray:
        """Score of every point; -inf where the point has a zero useful distance."""
        k = self.n_centers
        if k == 0:
            raise ContractViolation("scores are undefined before the first center")
        d = self.dist[:, :k]
        mask = self.useful[:, :k]
        count = mask.sum(axis=1)
        dmax = np.where(mask, d, -np.inf).max(axis=1)
        dmin = np.where(mask, d, np.inf).min(axis=1)
        ok = dmin > 0
        with np.errstate(divide="ignore", invalid="ignore"):
            mean = np.where(mask, d, 0.0).sum(axis=1) / count
            logsum = np.where(mask & ok[:, None], np.log(np.where(mask, d, 1.0)), 0.0).sum(axis=1)
            s = mean / dmax * logsum
        return np.where(ok, s, -np.inf)


def unc_update(state: UncState, new_center, new_index: int) -> UncState:
    """Add ``new_center`` as center number ``new_index`` (must be the next index)."""
    if new_index != state.n_centers:
        raise ContractViolation(
            f"new_index must be {state.n_centers}, got {new_index}"
        )
    return state.add(new_center)


def select_seeds_unc(dataset: Dataset, k: int, return_state: bool = False):
    """Deterministic UNC seeding.

    The first seed is the point with the smallest first coordinate; each
    further seed is the eligible point with the largest score.  A point is
    eligible if it is not yet a seed and has no zero distance to a useful
    center.  Ties go to the lowest dataset index.

    Args:
        dataset: points to seed.
        k: number of seeds, at most the number of distinct points.
        return_state: also return the final :class:`UncState`.

    Raises:
        ContractViolation: ``k < 1``.
        InsufficientDistinctPoints: ``k`` exceeds the distinct-point count.
    """
    check_k(dataset, k)
    X = dataset.points
    state = UncState(X, capacity=k)
    chosen = [int(np.argmin(X[:, 0]))]
    state.add(X[chosen[0]])
    is_seed = np.zeros(dataset.n, dtype=bool)
    is_seed[chosen[0]] = True
    while len(chosen) < k:
        s = state.scores()
        s[is_seed] = -np.inf
        nxt = int(np.argmax(s))
        if s[nxt] == -np.inf:
            # unreachable once check_k has passed
            raise ContractViolation("no eligible point left")
        chosen.append(nxt)
        is_seed[nxt] = True
        state.add(X[nxt])
    seeds = Seeds.from_indices(dataset, chosen, METHOD)
    return (seeds, state) if return_state else seeds
