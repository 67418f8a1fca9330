import pytest
from rics.action_level import ActionLevel

from pipeline_evolution.datagen import HillValleySpec
from pipeline_evolution.evolve import GpConfig
from pipeline_evolution.exceptions import ConfigurationError
from pipeline_evolution.experiment import Arm, CsvSource, EpistasisSource, ExperimentFactory, HillValleySource

from ..conftest import ROOT

MINIMAL = """
[experiment]
arms = ["rf-baseline", "Guided"]
seed = 2016

[data.hill_valley]
n_samples = 60
series_length = 20
"""


def _write(tmp_path, text, name="bench.toml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_minimal(tmp_path):
    spec = ExperimentFactory(_write(tmp_path, MINIMAL)).create()

    assert spec.name == "bench"
    assert spec.arms == (Arm.RF_BASELINE, Arm.GUIDED)
    assert spec.seed == 2016
    assert spec.replicates == 10
    assert spec.gp == GpConfig(population_size=50, generations=30)
    assert spec.source == HillValleySource(HillValleySpec(series_length=20, n_samples=60))
    assert spec.on_replicate_failure is ActionLevel.WARN
    assert spec.output_dir is None
    assert len(spec.fingerprint) == 64


def test_preset_and_overrides(tmp_path):
    text = """
    [experiment]
    preset = "full"
    replicates = 3
    on_replicate_failure = "raise"

    [gp]
    generations = 5
    selection_mode = "pareto"
    eval_budget_millis = 0

    [data.epistasis]
    heritability_target = 0.1
    noise_maf_range = [0.1, 0.4]
    """
    spec = ExperimentFactory(_write(tmp_path, text)).create()

    assert spec.replicates == 3
    assert spec.gp.population_size == 100
    assert spec.gp.generations == 5
    assert spec.gp.eval_budget_millis == 0
    assert spec.on_replicate_failure is ActionLevel.RAISE
    assert isinstance(spec.source, EpistasisSource)
    assert spec.source.spec.noise_maf_range == (0.1, 0.4)

    desk = ExperimentFactory(tmp_path / "bench.toml", preset="desk").create()
    assert desk.gp.population_size == 50
    assert desk.gp.generations == 5
    assert desk.replicates == 3


def test_relative_paths(tmp_path):
    text = """
    [experiment]
    name = "named"
    output_dir = "out"

    [data.csv]
    path = "data/input.csv"
    label_column = "diagnosis"
    """
    spec = ExperimentFactory(_write(tmp_path, text)).create()

    assert spec.name == "named"
    assert spec.output_dir == tmp_path / "out"
    assert spec.source == CsvSource(tmp_path / "data" / "input.csv", "diagnosis")


def test_interpolation(tmp_path, monkeypatch):
    monkeypatch.setenv("EXPERIMENT_NAME", "from-env")
    text = MINIMAL.replace("seed = 2016", 'seed = 2016\nname = "${EXPERIMENT_NAME}"')
    assert ExperimentFactory(_write(tmp_path, text)).create().name == "from-env"


def test_fingerprint(tmp_path):
    a = ExperimentFactory(_write(tmp_path, MINIMAL, "a.toml")).create()
    b = ExperimentFactory(_write(tmp_path, MINIMAL, "b.toml")).create()
    c = ExperimentFactory(_write(tmp_path, MINIMAL.replace("2016", "2017"), "c.toml")).create()

    assert a.fingerprint == b.fingerprint
    assert a.fingerprint != c.fingerprint


@pytest.mark.parametrize(
    "text, match",
    [
        (MINIMAL + "\n[extra]\nx = 1\n", r"Forbidden keys \['extra'\] in \[<root>\]-section"),
        (MINIMAL.replace("seed = 2016", "seeds = 2016"), r"Forbidden keys \['seeds'\] in \[experiment\]-section"),
        (MINIMAL + '\n[data.csv]\npath = "x.csv"\n', "Exactly one of"),
        ("[experiment]\nseed = 1\n", "Exactly one of"),
        (MINIMAL.replace("seed = 2016", 'preset = "huge"'), "Unknown preset 'huge'"),
        ("[data.csv]\nlabel_column = 'y'\n", "KeyError"),
        ("[data.csv]\npath = 'x.csv'\nsep = ';'\n", r"in \[data.csv\]-section"),
        (MINIMAL + "\n[gp]\npopulation = 3\n", "Unknown GpConfig keys"),
        (MINIMAL + "\n[gp]\nmutation_rate = 2.0\n", "Bad GpConfig"),
        (MINIMAL.replace("seed = 2016", "replicates = 0"), "replicates=0 < 1"),
        (MINIMAL.replace("n_samples = 60", "n_samples = 1"), "n_samples=1 < 2"),
        ("[experiment\n", "TOMLDecodeError"),
    ],
)
def test_bad_config(tmp_path, text, match):
    path = _write(tmp_path, text)
    with pytest.raises(ConfigurationError, match=match) as exc_info:
        ExperimentFactory(path).create()
    assert "raised when parsing file" in str(exc_info.value)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError, match="FileNotFoundError"):
        ExperimentFactory(tmp_path / "missing.toml").create()


@pytest.mark.parametrize("path", sorted((ROOT.parent / "experiments").glob("*.toml")), ids=lambda p: p.stem)
def test_shipped_documents(path):
    spec = ExperimentFactory(path).create()
    assert spec.name == path.stem
    assert Arm.RF_BASELINE in spec.arms
    assert spec.gp.population_size == 50

    full = ExperimentFactory(path, preset="full").create()
    assert full.gp.population_size == full.gp.generations == 100
