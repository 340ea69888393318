"""k-means seeding with useful nearest centers, plus baselines and a benchmark harness."""

from importlib.resources import files

from .baseline_init import kmeanspp_init, maxmin_init, random_init
from .dataset import Assignment, Dataset, centroid, distance, load_csv, ssedm
from .errors import (
    AssignmentError,
    ContractViolation,
    DimensionError,
    EmptyCluster,
    EmptyDataset,
    InsufficientDistinctPoints,
    ParseError,
    UnckmError,
)
from .lloyd import ClusteringResult, assign, run_lloyd, update_centers
from .rng import rng_stream
from .seeds import Seeds
from .unc_init import UncState, is_useless, select_seeds_unc, unc_exact, unc_score, unc_update

__version__ = "0.1.0"


def iris_path():
    """Path of the bundled UCI iris file (150 rows, species in column 4, no header)."""
    return files(__package__) / "data" / "iris.csv"


def load_iris() -> Dataset:
    """The bundled iris data with the species column dropped."""
    return load_csv(iris_path(), drop_columns=[4], name="iris")


__all__ = [
    "Assignment", "AssignmentError", "ClusteringResult", "ContractViolation",
    "Dataset", "DimensionError", "EmptyCluster", "EmptyDataset",
    "InsufficientDistinctPoints", "ParseError", "Seeds", "UncState", "UnckmError",
    "assign", "centroid", "distance", "iris_path", "is_useless", "kmeanspp_init",
    "load_csv", "load_iris", "maxmin_init", "random_init", "rng_stream",
    "run_lloyd", "select_seeds_unc", "ssedm", "unc_exact", "unc_score",
    "unc_update", "update_centers",
]
