import json
import logging
from pathlib import Path

import pytest

from pipeline_evolution.dataset import Dataset
from pipeline_evolution.evolve import GpConfig
from pipeline_evolution.testing import make_blobs, make_threshold

ROOT: Path = Path(__file__).parent


class CheckSerializeToJson(logging.Handler):
    def emit(self, record: logging.LogRecord) -> None:
        d = record.__dict__.copy()
        d.pop("exc_info", None)
        d.pop("args", None)
        try:
            json.dumps(d)
        except TypeError as e:
            pretty = f"[{record.name}:{record.levelname}]: {record.getMessage()}"
            raise AssertionError(f"Record '{pretty}' not JSON serializable: '{e}'") from e


logging.root.addHandler(CheckSerializeToJson())


@pytest.fixture(scope="session")
def blobs() -> Dataset:
    return make_blobs(40, 2, 4, seed=1)


@pytest.fixture(scope="session")
def blobs3() -> Dataset:
    return make_blobs(30, 3, 3, seed=2)


@pytest.fixture(scope="session")
def threshold_data() -> Dataset:
    return make_threshold(80, 3, seed=3)


@pytest.fixture(scope="session")
def small_gp() -> GpConfig:
    return GpConfig(population_size=8, generations=2, seed=2016, eval_budget_millis=0)
