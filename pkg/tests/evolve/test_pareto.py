import math

import numpy as np
import pytest

from pipeline_evolution.evolve import (
    Individual,
    crowding_distance,
    dominates,
    fast_nondominated_sort,
    pareto_ranking,
    select_pareto,
)
from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import LEAF, FitnessRecord, Model, Pipeline, Transform
from pipeline_evolution.testing import brute_force_fronts


def _pipeline(size: int) -> Pipeline:
    node = LEAF
    for _ in range(size - 1):
        node = Transform(K.StandardScale, (), node)
    return Pipeline(Model(K.KNN, (), node))


def _individual(accuracy: float, size: int, failed: bool = False, discovery: int = 0) -> Individual:
    return Individual(_pipeline(size), FitnessRecord(accuracy, size, 0, failed=failed), discovery)


def test_fronts_match_brute_force():
    rng = np.random.default_rng(2016)
    for n in [*range(1, 21), *rng.integers(21, 201, size=30)]:
        accuracy = rng.choice(np.linspace(0, 1, 11), size=n)
        size = rng.integers(1, 11, size=n)
        points = [(float(a), float(s)) for a, s in zip(accuracy, size, strict=True)]

        actual = [set(front.indices) for front in fast_nondominated_sort(points)]
        assert actual == brute_force_fronts(points)


def test_fronts_are_ordered():
    fronts = fast_nondominated_sort([(0.5, 3), (0.9, 1), (0.5, 3), (0.1, 9)])
    assert [f.indices for f in fronts] == [(1,), (0, 2), (3,)]


def test_empty():
    assert fast_nondominated_sort([]) == []


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((0.9, 2), (0.9, 2), False),
        ((0.9, 2), (0.9, 3), True),
        ((0.9, 2), (0.8, 2), True),
        ((0.9, 3), (0.8, 2), False),
    ],
)
def test_dominates(a, b, expected):
    assert dominates(a, b) is expected


def test_crowding_distance():
    points = [(0.1, 1.0), (0.5, 2.0), (0.6, 4.0), (0.9, 5.0)]
    distance = crowding_distance(points, [0, 1, 2, 3])
    assert distance[0] == distance[3] == math.inf
    # Gaps are normalized by the range of each objective and the number of objectives.
    assert distance[1] == pytest.approx(((0.6 - 0.1) / 0.8 + (4 - 1) / 4) / 2)
    assert distance[2] == pytest.approx(((0.9 - 0.5) / 0.8 + (5 - 2) / 4) / 2)


def test_crowding_zero_span():
    distance = crowding_distance([(0.5, 1.0), (0.5, 1.0), (0.5, 1.0)], [0, 1, 2])
    assert distance[1] == 0.0
    assert math.inf in distance


def test_ranking_puts_failures_last():
    population = [
        _individual(0.0, 1, failed=True),
        _individual(0.7, 3),
        _individual(0.9, 1),
        Individual(_pipeline(1)),
        _individual(0.8, 2),
    ]
    ranking = pareto_ranking(population)
    assert ranking[0] == 2
    assert set(ranking[:3]) == {1, 2, 4}
    assert ranking[3:] == [0, 3]


@pytest.mark.parametrize("n, fraction, expected_parents", [(50, 0.2, 10), (100, 0.2, 20), (7, 0.2, 2), (3, 0.01, 1)])
def test_select_pareto(n, fraction, expected_parents):
    rng = np.random.default_rng(n)
    population = [_individual(float(rng.random()), int(rng.integers(1, 8)), discovery=i) for i in range(n)]
    selected = select_pareto(population, rng, fraction)
    assert len(selected) == n

    parents = {id(ind) for ind in selected}
    assert len(parents) == expected_parents
    ranking = pareto_ranking(population)
    assert parents == {id(population[i]) for i in ranking[:expected_parents]}

    if n % expected_parents == 0:
        counts = {p: sum(id(ind) == p for ind in selected) for p in parents}
        assert set(counts.values()) == {n // expected_parents}


def test_select_pareto_pads_with_failures():
    population = [_individual(0.0, 1, failed=True, discovery=i) for i in range(9)] + [_individual(0.6, 2)]
    selected = select_pareto(population, np.random.default_rng(0), fraction=0.2)
    assert {id(ind) for ind in selected} == {id(population[9]), id(population[0])}
