import numpy as np
import pytest

from pipeline_evolution.evolve import Individual, double_tournament, elites, select_standard
from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import LEAF, FitnessRecord, Model, Pipeline, Transform


def _individual(accuracy: float, size: int, failed: bool = False, discovery: int = 0) -> Individual:
    node = LEAF
    for _ in range(size - 1):
        node = Transform(K.RobustScale, (), node)
    return Individual(Pipeline(Model(K.KNN, (), node)), FitnessRecord(accuracy, size, 0, failed=failed), discovery)


def test_parsimony_pressure():
    population = [_individual(0.8, 2), _individual(0.8, 6)]
    winners = double_tournament(population, np.random.default_rng(2016), 10_000, parsimony_probability=0.7)
    # Same fitness winners half the time (1/4 each), else the smaller wins 70 % of the size contests.
    share = winners.count(0) / len(winners)
    assert share > 0.5
    assert share == pytest.approx(0.25 + 0.5 * 0.7, abs=0.03)


def test_neutral_parsimony_prefers_accuracy():
    population = [_individual(0.9, 6), _individual(0.5, 1)]
    winners = double_tournament(population, np.random.default_rng(0), 2000, parsimony_probability=0.5)
    assert winners.count(0) / len(winners) == pytest.approx(56 / 64, abs=0.03)


def test_failed_rarely_wins():
    population = [_individual(0.0, 1, failed=True), _individual(0.1, 9)]
    winners = double_tournament(population, np.random.default_rng(1), 10_000, parsimony_probability=0.5)
    # A failed candidate must win a 3-way fitness tournament by drawing only itself.
    assert winners.count(0) / len(winners) == pytest.approx(1 / 64 + 14 / 64 / 2, abs=0.02)


@pytest.mark.parametrize("parsimony_probability", [0.49, 1.01])
def test_bad_parsimony(parsimony_probability):
    with pytest.raises(ValueError, match="parsimony_probability"):
        double_tournament([_individual(0.5, 1)], np.random.default_rng(0), 1, parsimony_probability=parsimony_probability)


def test_deterministic():
    rng = np.random.default_rng(4)
    population = [_individual(float(rng.random()), int(rng.integers(1, 5)), discovery=i) for i in range(20)]
    first = double_tournament(population, np.random.default_rng(9), 50)
    assert first == double_tournament(population, np.random.default_rng(9), 50)


def test_elites_tie_break():
    population = [
        _individual(0.9, 3, discovery=0),
        _individual(0.9, 2, discovery=1),
        _individual(0.9, 2, discovery=2),
        _individual(0.95, 5, discovery=3),
        _individual(1.0, 1, failed=True, discovery=4),
    ]
    assert elites(population, 5) == [3, 1, 2, 0, 4]


@pytest.mark.parametrize("n, elite_count", [(10, None), (10, 3), (2, 5)])
def test_select_standard(n, elite_count):
    rng = np.random.default_rng(n)
    population = [_individual(float(rng.random()), int(rng.integers(1, 5)), discovery=i) for i in range(n)]
    selected = select_standard(population, rng, elite_count)
    assert len(selected) == n

    expected = min(n, elite_count or max(1, round(0.1 * n)))
    assert selected[:expected] == [population[i] for i in elites(population, expected)]


def test_best_survives():
    rng = np.random.default_rng(3)
    population = [_individual(0.5, 2, discovery=i) for i in range(9)] + [_individual(0.99, 7, discovery=9)]
    for _ in range(20):
        assert population[-1] in select_standard(population, rng)
