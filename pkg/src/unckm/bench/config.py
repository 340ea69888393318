from __future__ import annotations

from dataclasses import asdict, dataclass, field

from ..errors import ContractViolation
from ..lloyd import DEFAULT_MAX_ITER
from ..rng import UINT64_MAX

INITIALIZERS = ("random", "kmeanspp", "maxmin", "unc")
SCALINGS = ("none", "minmax", "zscore")
FORMATS = ("json", "csv")
BUILTIN_PREFIX = "builtin:"

# CSV options for the three UCI files of the original comparison.  The k for
# shuttle and HAR is the class count: the original study never states it.
PRESETS = {
    "iris": dict(data="builtin:iris", drop_columns=(4,), k=3, delimiter=","),
    "shuttle": dict(
        data="shuttle.trn", drop_columns=(9,), k=7, delimiter="whitespace",
        note="k unspecified in paper; class count used",
    ),
    "har": dict(
        data="X_train.txt", drop_columns=(), k=6, delimiter="whitespace",
        note="k unspecified in paper; class count used",
    ),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """One benchmark: a dataset, a k, and the initializers to compare."""

    dataset_path: str
    k: int
    initializers: tuple[str, ...] = ("random", "kmeanspp", "unc")
    runs: int = 50
    base_seed: int = 0
    max_iter: int = DEFAULT_MAX_ITER
    has_header: bool = False
    delimiter: str = ","
    drop_columns: tuple[int, ...] = ()
    scale: str = "none"
    output_path: str | None = None
    output_format: str = "json"
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "initializers", tuple(self.initializers))
        object.__setattr__(self, "drop_columns", tuple(int(c) for c in self.drop_columns))
        self.validate()

    def validate(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise ContractViolation(f"k must be >= 1, got {self.k}")
        if self.runs < 1:
            raise ContractViolation(f"runs must be >= 1, got {self.runs}")
        if self.max_iter < 1:
            raise ContractViolation(f"max_iter must be >= 1, got {self.max_iter}")
        if not self.initializers:
            raise ContractViolation("at least one initializer is required")
        unknown = [i for i in self.initializers if i not in INITIALIZERS]
        if unknown:
            raise ContractViolation(
                f"unknown initializer(s) {', '.join(unknown)}; choose from {', '.join(INITIALIZERS)}"
            )
        if len(set(self.initializers)) != len(self.initializers):
            raise ContractViolation("initializers listed more than once")
        if not 0 <= self.base_seed <= UINT64_MAX:
            raise ContractViolation("seed must be an unsigned 64-bit integer")
        if self.scale not in SCALINGS:
            raise ContractViolation(f"scale must be one of {', '.join(SCALINGS)}")
        if self.output_format not in FORMATS:
            raise ContractViolation(f"format must be one of {', '.join(FORMATS)}")

    def echo(self) -> dict:
        """Config fields as written into reports."""
        d = asdict(self)
        del d["output_path"], d["output_format"]
        d["initializers"] = list(self.initializers)
        d["drop_columns"] = list(self.drop_columns)
        return d
