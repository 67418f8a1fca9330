"""Create experiments from TOML files."""

import typing as _t
from collections.abc import Generator, Iterable
from contextlib import contextmanager
from pathlib import Path

from .._compat import PathLikeType
from ..datagen import EpistasisSpec, HillValleySpec
from ..evolve import GpConfig
from ..exceptions import ConfigurationError
from ..utils import fingerprint, load_toml_file
from ._spec import PRESETS, CsvSource, DataSource, EpistasisSource, ExperimentSpec, HillValleySource


class ExperimentFactory:
    """Create an :class:`.ExperimentSpec` from a TOML file.

    Relative ``path`` and ``output_dir`` values are resolved against the directory of the file.

    Args:
        file: Path to the experiment document.
        preset: Override the ``experiment.preset`` key of the file.

    Examples:
        A minimal document.

        .. code-block:: toml

           [experiment]
           preset = "desk"
           arms = ["rf_baseline", "guided"]
           seed = 2016

           [data.hill_valley]
           n_samples = 600
    """

    TOP_LEVEL_KEYS = ("experiment", "data", "gp")
    """Top-level keys allowed in the configuration file."""
    EXPERIMENT_KEYS = (
        "name",
        "preset",
        "arms",
        "replicates",
        "outer_holdout_fraction",
        "seed",
        "rf_trees",
        "workers",
        "on_replicate_failure",
        "output_dir",
    )
    """Keys allowed in the ``[experiment]`` section."""
    DATA_KEYS = ("csv", "epistasis", "hill_valley")
    """Data sources. Exactly one must be given."""

    def __init__(self, file: PathLikeType, preset: str | None = None) -> None:
        self.file = str(file)
        self.preset = preset

    def create(self) -> ExperimentSpec:
        """Create an ``ExperimentSpec`` from a TOML file.

        Raises:
            ConfigurationError: If the file is invalid.
        """
        with _rethrow_with_file(self.file):
            config = load_toml_file(self.file, allow_interpolation=True)
            _check_allowed_keys(self.TOP_LEVEL_KEYS, actual=config, toml_path="<root>")

            experiment = dict(config.get("experiment", {}))
            _check_allowed_keys(self.EXPERIMENT_KEYS, actual=experiment, toml_path="experiment")

            preset_name = self.preset or experiment.pop("preset", "desk")
            experiment.pop("preset", None)
            if preset_name not in PRESETS:
                raise ValueError(f"Unknown preset {preset_name!r}. Known presets: {sorted(PRESETS)}.")
            preset = PRESETS[preset_name]

            gp = {"population_size": preset.population_size, "generations": preset.generations}
            gp.update(config.get("gp", {}))
            experiment.setdefault("replicates", preset.replicates)
            experiment.setdefault("name", Path(self.file).stem)

            base = Path(self.file).parent
            if "output_dir" in experiment:
                experiment["output_dir"] = base / experiment["output_dir"]

            return ExperimentSpec(
                source=self._make_source(config.get("data", {}), base),
                gp=GpConfig.from_dict(gp),
                fingerprint=fingerprint(config),
                **experiment,
            )

    @classmethod
    def _make_source(cls, config: dict[str, _t.Any], base: Path) -> DataSource:
        _check_allowed_keys(cls.DATA_KEYS, actual=config, toml_path="data")
        if len(config) != 1:
            raise ValueError(f"Exactly one of {[f'data.{k}' for k in cls.DATA_KEYS]} is required, got {sorted(config)}.")

        kind, kwargs = next(iter(config.items()))
        if kind == "csv":
            _check_allowed_keys(["path", "label_column"], actual=kwargs, toml_path="data.csv")
            return CsvSource(base / kwargs["path"], kwargs.get("label_column", "class"))
        if kind == "epistasis":
            if "noise_maf_range" in kwargs:
                kwargs = {**kwargs, "noise_maf_range": tuple(kwargs["noise_maf_range"])}
            return EpistasisSource(EpistasisSpec(**kwargs))
        return HillValleySource(HillValleySpec(**kwargs))


def _check_allowed_keys(allowed: Iterable[str], *, actual: Iterable[str], toml_path: str) -> None:
    bad_keys = set(actual).difference(allowed)
    if bad_keys:
        raise ValueError(f"Forbidden keys {sorted(bad_keys)} in [{toml_path}]-section.")


@contextmanager
def _rethrow_with_file(file: str) -> Generator[None, None, None]:
    try:
        yield
    except Exception as e:
        msg = f"{type(e).__name__}: {e}\n   raised when parsing file: {Path(file).resolve()}"
        raise ConfigurationError(msg) from e
