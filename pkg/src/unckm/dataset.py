"""Dataset container, delimited-file loading and the SSEDM objective.

Points are plain 1-D float64 numpy arrays; a :class:`Dataset` is an
immutable ``(n, m)`` array plus a name.
"""

from __future__ import annotations

import csv
import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AssignmentError,
    DimensionError,
    EmptyCluster,
    EmptyDataset,
    ParseError,
)

WHITESPACE = "whitespace"


def as_point(coords) -> np.ndarray:
    """Convert ``coords`` to a finite 1-D float64 array."""
    p = np.asarray(coords, dtype=np.float64)
    if p.ndim == 0:
        p = p.reshape(1)
    if p.ndim != 1 or p.size == 0:
        raise DimensionError(f"a point must be a non-empty vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ValueError("point coordinates must be finite")
    return p


@dataclass(frozen=True)
class Dataset:
    """An instance of n points in m dimensions.

    The underlying array is copied on construction and marked read-only,
    so a Dataset can be shared freely between workers.
    """

    points: np.ndarray
    name: str = "dataset"
    checksum: str | None = field(default=None, compare=False)

    def __post_init__(self):
        X = np.array(self.points, dtype=np.float64, copy=True)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        if X.ndim != 2:
            raise DimensionError(f"expected a 2-D array of points, got shape {X.shape}")
        if X.shape[0] == 0:
            raise EmptyDataset("dataset has no points")
        if X.shape[1] == 0:
            raise DimensionError("points must have at least one coordinate")
        if not np.all(np.isfinite(X)):
            raise ValueError("dataset contains non-finite values")
        X.setflags(write=False)
        object.__setattr__(self, "points", X)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def m(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i) -> np.ndarray:
        return self.points[i]

    def distinct_count(self) -> int:
        """Number of distinct positions (duplicate rows counted once)."""
        return int(np.unique(self.points, axis=0).shape[0])

    def content_hash(self) -> str:
        """SHA-256 of the float64 point array, for datasets not loaded from disk."""
        return hashlib.sha256(np.ascontiguousarray(self.points).tobytes()).hexdigest()

    def __eq__(self, other):
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.name == other.name and np.array_equal(self.points, other.points)

    def __hash__(self):
        return hash((self.name, self.points.shape, self.content_hash()))


@dataclass(frozen=True)
class Assignment:
    """Cluster labels in ``[0, k)`` for every point of a dataset."""

    labels: np.ndarray
    k: int

    def __post_init__(self):
        labels = np.array(self.labels, copy=True)
        if labels.ndim != 1:
            raise AssignmentError("labels must be a 1-D sequence")
        if labels.size and not np.issubdtype(labels.dtype, np.integer):
            if not np.all(labels == np.round(labels)):
                raise AssignmentError("labels must be integers")
        labels = labels.astype(np.intp)
        if self.k < 1:
            raise AssignmentError(f"k must be >= 1, got {self.k}")
        if labels.size and (labels.min() < 0 or labels.max() >= self.k):
            bad = int(labels[(labels < 0) | (labels >= self.k)][0])
            raise AssignmentError(f"label {bad} out of range [0, {self.k})")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return self.labels.size

    def __eq__(self, other):
        if not isinstance(other, Assignment):
            return NotImplemented
        return self.k == other.k and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash((self.k, self.labels.tobytes()))


def _split_row(line: str, delimiter: str) -> list[str]:
    if delimiter == WHITESPACE or delimiter.isspace():
        return line.split()
    return next(csv.reader([line], delimiter=delimiter))


def load_csv(
    path: str | Path,
    has_header: bool = False,
    drop_columns: Iterable[int] = (),
    delimiter: str = ",",
    name: str | None = None,
) -> Dataset:
    """Load a delimited text file of numeric rows into a Dataset.

    Args:
        path: File to read. Blank lines are ignored.
        has_header: Skip the first non-blank line.
        drop_columns: 0-based column indices to discard (class labels etc.).
            Negative indices count from the end of the row.
        delimiter: Single-character field separator, or ``"whitespace"`` (any
            space character also selects whitespace splitting, so runs of
            spaces count as one separator).
        name: Dataset label; defaults to the file stem.

    Raises:
        ParseError: ragged rows or non-numeric kept cells, with the row number.
        EmptyDataset: the file holds no data rows.
    """
    path = Path(path)
    raw = path.read_bytes()
    text = raw.decode("utf-8-sig")
    drop = set(drop_columns)

    rows: list[list[float]] = []
    width = None
    header_pending = has_header
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if header_pending:
            header_pending = False
            continue
        cells = _split_row(line, delimiter)
        ncols = len(cells)
        dropped = {c % ncols for c in drop if -ncols <= c < ncols}
        kept = [c.strip() for j, c in enumerate(cells) if j not in dropped]
        if width is None:
            width = len(kept)
            if width == 0:
                raise ParseError("no columns left after dropping", row=lineno)
        elif len(kept) != width:
            raise ParseError(f"expected {width} fields, found {len(kept)}", row=lineno)
        try:
            values = [float(c) for c in kept]
        except ValueError:
            bad = next(c for c in kept if not _is_float(c))
            raise ParseError(f"non-numeric value {bad!r}", row=lineno) from None
        if not all(math.isfinite(v) for v in values):
            raise ParseError("non-finite value", row=lineno)
        rows.append(values)

    if not rows:
        raise EmptyDataset(f"{path} contains no data rows")
    return Dataset(
        np.array(rows, dtype=np.float64),
        name=name or path.stem,
        checksum=hashlib.sha256(raw).hexdigest(),
    )


def _is_float(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def row_distances(A: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Distances from every row of ``A`` to ``c``.

    Every distance in the package goes through this kernel, so two pairs of
    bit-identical points always get bit-identical distances.  Domination
    tests compare distances with strict ``<`` and depend on that.
    """
    diff = A - c
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def distance(a, b) -> float:
    """Euclidean distance between two points of equal dimension."""
    a = np.asarray(a, dtype=np.float64).reshape(-1)
    b = np.asarray(b, dtype=np.float64).reshape(-1)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.size} vs {b.size}")
    return float(row_distances(a[None, :], b)[0])


def centroid(points: Sequence) -> np.ndarray:
    """Coordinate-wise mean of a non-empty collection of points."""
    P = np.asarray(points, dtype=np.float64)
    if P.size == 0:
        raise EmptyCluster("centroid of an empty cluster is undefined")
    if P.ndim == 1:
        P = P.reshape(1, -1)
    return P.mean(axis=0)


def cluster_means(X: np.ndarray, labels: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-cluster means and sizes. Rows of empty clusters are NaN."""
    counts = np.bincount(labels, minlength=k)
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, labels, X)
    with np.errstate(invalid="ignore", divide="ignore"):
        means = sums / counts[:, None]
    return means, counts


def ssedm(dataset: Dataset, assignment: Assignment) -> float:
    """Sum over clusters of squared distances from each member to its cluster mean.

    Means come from the assignment itself; empty clusters contribute 0.
    """
    X = dataset.points
    if len(assignment) != dataset.n:
        raise AssignmentError(
            f"assignment has {len(assignment)} labels for {dataset.n} points"
        )
    labels = assignment.labels
    means, _ = cluster_means(X, labels, assignment.k)
    resid = X - means[labels]
    # numpy's pairwise summation keeps iris-scale error far below 1e-9 relative
    return float(np.sum(resid * resid))
