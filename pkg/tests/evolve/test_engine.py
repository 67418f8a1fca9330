import json
import logging

import numpy as np
import pytest

from pipeline_evolution.dataset import Dataset
from pipeline_evolution.evolve import RunResult, SelectionMode, dominates, evolve_run, random_search_run
from pipeline_evolution.evolve.exceptions import SetupError
from pipeline_evolution.pipeline import validate


def _without_timings(result: RunResult) -> dict:
    doc = result.to_document()
    doc.pop("config")
    for h in doc["history"]:
        h.pop("elapsed_seconds")
    for ind in [doc["best"], *doc["pareto_front"]]:
        if ind and ind["fitness"]:
            ind["fitness"].pop("eval_millis")
    return doc


@pytest.mark.parametrize("mode", ["standard", "pareto"])
def test_evaluation_count(mode, small_gp, blobs):
    cfg = small_gp.replace(selection_mode=SelectionMode.parse(mode))
    result = evolve_run(cfg, blobs)

    assert result.total_evaluations <= cfg.population_size * (cfg.generations + 1)
    assert result.total_evaluations == sum(h.evaluations for h in result.history)
    assert result.history[0].evaluations == cfg.population_size
    assert [h.generation for h in result.history] == [0, 1, 2]
    assert result.mode is cfg.selection_mode


def test_reshuffle_reevaluates_everything(small_gp, blobs):
    cfg = small_gp.replace(reshuffle_split=True)
    result = evolve_run(cfg, blobs)
    assert result.total_evaluations == cfg.population_size * (cfg.generations + 1)


def test_random_search_count(small_gp, blobs):
    result = random_search_run(small_gp, blobs)
    assert result.total_evaluations == small_gp.population_size * small_gp.generations
    assert len(result.history) == small_gp.generations
    assert result.mode is SelectionMode.RandomSearch


def test_random_mode_delegates(small_gp, blobs):
    result = evolve_run(small_gp.replace(selection_mode="random"), blobs)
    assert result.total_evaluations == small_gp.population_size * small_gp.generations


def test_random_search_without_batches(small_gp, blobs):
    result = random_search_run(small_gp.replace(generations=0), blobs)
    assert result.best is None
    assert result.total_evaluations == 0


def test_best_is_best_ever(small_gp, blobs):
    result = evolve_run(small_gp, blobs)
    assert result.best is not None
    assert validate(result.best.pipeline, small_gp.max_depth, small_gp.max_operators) == []
    assert result.best.accuracy == max(h.best_accuracy for h in result.history)


def test_running_best_is_monotonic(small_gp, blobs):
    history = random_search_run(small_gp.replace(generations=4), blobs).history
    best = [h.best_accuracy for h in history]
    assert best == sorted(best)


@pytest.mark.parametrize("mode", ["standard", "pareto", "random"])
def test_deterministic(mode, small_gp, blobs):
    cfg = small_gp.replace(selection_mode=SelectionMode.parse(mode))
    first = _without_timings(evolve_run(cfg, blobs))
    second = _without_timings(evolve_run(cfg.replace(max_workers=3), blobs))
    assert first == second


def test_seed_matters(small_gp, blobs):
    a = _without_timings(evolve_run(small_gp, blobs))
    b = _without_timings(evolve_run(small_gp.replace(seed=small_gp.seed + 1), blobs))
    a.pop("seed")
    b.pop("seed")
    assert a != b


def test_pareto_front(small_gp, blobs3):
    result = evolve_run(small_gp.replace(selection_mode="pareto", generations=3), blobs3)
    front = result.pareto_front
    assert front
    points = [(ind.accuracy, ind.pipeline.size) for ind in front]
    assert not any(dominates(a, b) for a in points for b in points)
    assert [ind.rank_key for ind in front] == sorted(ind.rank_key for ind in front)


def test_standard_has_no_front(small_gp, blobs):
    assert evolve_run(small_gp, blobs).pareto_front == ()


def test_document_round_trip(small_gp, blobs):
    result = evolve_run(small_gp.replace(selection_mode="pareto"), blobs)
    doc = json.loads(json.dumps(result.to_document()))
    assert doc["format"] == "tpot-run/1"
    assert RunResult.from_document(doc) == result


def test_document_bad_format():
    with pytest.raises(ValueError, match="tpot-run/1"):
        RunResult.from_document({"format": "tpot-tree/1"})


@pytest.mark.parametrize(
    "data",
    [
        Dataset.from_arrays([[0.0], [1.0], [2.0]], [0, 1, 1]),
        Dataset.from_arrays(np.zeros((4, 0)), [0, 0, 1, 1]),
    ],
)
def test_setup_error(data, small_gp, caplog):
    with caplog.at_level(logging.DEBUG, logger="pipeline_evolution"), pytest.raises(SetupError):
        evolve_run(small_gp, data)
    assert not any("evaluation" in r.getMessage().lower() for r in caplog.records)


def test_generation_logging(small_gp, blobs, caplog):
    with caplog.at_level(logging.DEBUG, logger="pipeline_evolution.evolve"):
        evolve_run(small_gp, blobs, task_id=17)
    titles = [getattr(r, "event_title", None) for r in caplog.records]
    assert titles.count("EVOLVER.GENERATION.EXIT") == small_gp.generations + 1
    assert "EVOLVER.RUN.ENTER" in titles
    assert "EVOLVER.RUN.EXIT" in titles
    assert {getattr(r, "task_id", 17) for r in caplog.records} == {17}
