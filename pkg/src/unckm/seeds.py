from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .errors import ContractViolation, InsufficientDistinctPoints


@dataclass(frozen=True)
class Seeds:
    """Initial centers chosen from among the data points.

    Attributes:
        centers: ``(k, m)`` array, row i equal to ``dataset[source_indices[i]]``.
        source_indices: dataset row of each center, in selection order.
        method: tag of the initializer that produced them.
    """

    centers: np.ndarray
    source_indices: tuple[int, ...]
    method: str

    @property
    def k(self) -> int:
        return len(self.source_indices)

    @classmethod
    def from_indices(cls, dataset: Dataset, indices, method: str) -> "Seeds":
        idx = tuple(int(i) for i in indices)
        if len(set(idx)) != len(idx):
            raise ContractViolation(f"duplicate seed indices: {idx}")
        centers = dataset.points[list(idx)].copy()
        centers.setflags(write=False)
        return cls(centers, idx, method)

    def __eq__(self, other):
        if not isinstance(other, Seeds):
            return NotImplemented
        return (
            self.method == other.method
            and self.source_indices == other.source_indices
            and np.array_equal(self.centers, other.centers)
        )

    def __hash__(self):
        return hash((self.method, self.source_indices))


def check_k(dataset: Dataset, k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ContractViolation(f"k must be a positive integer, got {k!r}")
    if k > dataset.n:
        raise InsufficientDistinctPoints(f"k={k} exceeds n={dataset.n}")
    distinct = dataset.distinct_count()
    if k > distinct:
        raise InsufficientDistinctPoints(
            f"k={k} exceeds the {distinct} distinct points of {dataset.name!r}"
        )
