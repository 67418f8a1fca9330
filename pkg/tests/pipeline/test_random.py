import random

import numpy as np
import pytest

from pipeline_evolution.pipeline import Model, random_pipeline, validate


@pytest.mark.parametrize("max_depth, max_operators", [(1, 20), (3, 5), (10, 20), (6, 2)])
def test_random_pipelines_are_valid(max_depth, max_operators):
    rng = np.random.default_rng(max_depth * 100 + max_operators)
    for _ in range(200):
        p = random_pipeline(rng, max_depth, max_operators)
        assert isinstance(p.root, Model)
        assert validate(p, max_depth, max_operators) == []


def test_deterministic():
    a = [random_pipeline(np.random.default_rng(5), 8) for _ in range(3)]
    assert a[0] == a[1] == a[2]


def test_independent_of_global_random():
    random.seed(1)
    a = random_pipeline(np.random.default_rng(5), 8)
    random.seed(2)
    assert random_pipeline(np.random.default_rng(5), 8) == a


def test_shapes_vary():
    rng = np.random.default_rng(0)
    sizes = {random_pipeline(rng, 8).size for _ in range(200)}
    assert len(sizes) >= 4


@pytest.mark.parametrize("max_depth, max_operators", [(0, 5), (3, 0)])
def test_bad_caps(max_depth, max_operators):
    with pytest.raises(ValueError, match="at least 1"):
        random_pipeline(np.random.default_rng(0), max_depth, max_operators)
