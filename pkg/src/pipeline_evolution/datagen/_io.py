import logging
import typing as _t
from datetime import datetime
from pathlib import Path

import numpy as np
import pandas as pd

from .._compat import PathLikeType
from ..dataset import Dataset
from ..utils import BaseMetadata
from ._epistasis import EpistasisSimulation, EpistasisSpec
from ._hill_valley import HillValleySpec
from ._penetrance import PenetranceTable
from .exceptions import DataIOError

LOGGER = logging.getLogger(__package__).getChild("io")

LABEL_COLUMN = "class"
METADATA_SUFFIX = ".meta.json"


def to_frame(ds: Dataset) -> pd.DataFrame:
    """Convert `ds` to a frame with one column per feature and a final ``"class"`` column.

    Integral feature columns are written as integers.
    """
    rows = ds.rows
    data: dict[str, _t.Any] = {}
    for i, name in enumerate(ds.feature_names):
        column = rows[:, i]
        data[name] = column.astype(np.int64) if np.array_equal(column, np.round(column)) else column
    if LABEL_COLUMN in data:
        raise DataIOError("<frame>", f"a feature is named '{LABEL_COLUMN}', which is reserved for labels")
    data[LABEL_COLUMN] = ds.labels
    return pd.DataFrame(data)


def write_csv(ds: Dataset, path: PathLikeType, *, metadata: "SimulationMetadata | None" = None) -> Path:
    """Write `ds` as comma-separated values.

    Args:
        ds: Dataset to write. The guess column is not written.
        path: Output file. Parent directories are created.
        metadata: If given, also written to ``<path>.meta.json``.

    Returns:
        The output path.

    Raises:
        DataIOError: If `ds` has no features, or writing fails.
    """
    path = Path(path)
    if ds.n_features == 0:
        raise DataIOError(path, f"refusing to write a dataset without features: {ds}")

    frame = to_frame(ds)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
        if metadata is not None:
            metadata.write(metadata_path(path))
    except OSError as e:
        raise DataIOError(path, str(e)) from e

    LOGGER.info(f"Wrote {ds} to '{path}'.")
    return path


def metadata_path(path: PathLikeType) -> Path:
    """Sidecar metadata path of a CSV file."""
    path = Path(path)
    return path.with_name(path.name + METADATA_SUFFIX)


class SimulationMetadata(BaseMetadata):
    """Sidecar document describing how a CSV file was generated.

    Args:
        kind: Generator name, ``"epistasis"`` or ``"hill_valley"``.
        spec: Generator settings.
        seed: Seed of the generator.
        predictive_columns: Column positions of the SNPs of each model.
        tables: Penetrance tables of each model.
        prevalence: Realized prevalence before balancing.
        noise_mafs: Minor allele frequency of each noise SNP.
        versions: Top-level dependency versions.
        created: The time at which the metadata was originally created.
    """

    FORMAT = "tpot-sim/1"

    def __init__(
        self,
        kind: str,
        spec: dict[str, _t.Any],
        seed: int,
        predictive_columns: list[list[int]] | None = None,
        tables: list[PenetranceTable] | None = None,
        prevalence: float | None = None,
        noise_mafs: list[float] | None = None,
        versions: dict[str, str] | None = None,
        created: datetime | None = None,
    ) -> None:
        super().__init__(versions, created)
        self.kind = kind
        self.spec = spec
        self.seed = seed
        self.predictive_columns = predictive_columns or []
        self.tables = tables or []
        self.prevalence = prevalence
        self.noise_mafs = noise_mafs or []

    @classmethod
    def for_epistasis(cls, spec: EpistasisSpec, seed: int, simulation: EpistasisSimulation) -> "SimulationMetadata":
        """Create metadata for a :func:`.simulate_epistatic_dataset` result."""
        return cls(
            kind="epistasis",
            spec=spec.to_dict(),
            seed=seed,
            predictive_columns=[list(pair) for pair in simulation.predictive_columns],
            tables=list(simulation.tables),
            prevalence=simulation.prevalence,
            noise_mafs=list(simulation.noise_mafs),
        )

    @classmethod
    def for_hill_valley(cls, spec: HillValleySpec, seed: int) -> "SimulationMetadata":
        """Create metadata for a :func:`.generate_hill_valley` result."""
        return cls(kind="hill_valley", spec=spec.to_dict(), seed=seed)

    def _to_payload(self) -> dict[str, _t.Any]:
        return dict(
            kind=self.kind,
            spec=self.spec,
            seed=self.seed,
            predictive_columns=self.predictive_columns,
            tables=[t.to_dict() for t in self.tables],
            prevalence=self.prevalence,
            noise_mafs=self.noise_mafs,
        )

    @classmethod
    def _from_payload(cls, payload: dict[str, _t.Any]) -> dict[str, _t.Any]:
        tables = [PenetranceTable.from_dict(t) for t in payload.get("tables", [])]
        return {**payload, "tables": tables}
