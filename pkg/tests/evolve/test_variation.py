import numpy as np
import pytest

from pipeline_evolution.evolve import crossover, mutate
from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import LEAF, Combine, Model, Pipeline, Transform, random_pipeline, validate


@pytest.mark.parametrize("max_depth, max_operators", [(10, 20), (3, 3), (2, 1)])
def test_mutation_respects_caps(max_depth, max_operators):
    rng = np.random.default_rng(max_depth + max_operators)
    for _ in range(300):
        p = random_pipeline(rng, max_depth, max_operators)
        child = mutate(p, rng, max_depth, max_operators)
        assert validate(child, max_depth, max_operators) == []


@pytest.mark.parametrize("max_depth, max_operators", [(10, 20), (4, 4)])
def test_crossover_respects_caps(max_depth, max_operators):
    rng = np.random.default_rng(7)
    for _ in range(300):
        a = random_pipeline(rng, max_depth, max_operators)
        b = random_pipeline(rng, max_depth, max_operators)
        child = crossover(a, b, rng, max_depth, max_operators)
        assert validate(child, max_depth, max_operators) == []


def test_mutation_at_operator_cap_keeps_shape():
    rng = np.random.default_rng(3)
    p = Pipeline(Model(K.KNN, (), Transform(K.SelectKBest, (), LEAF)))
    for _ in range(100):
        child = mutate(p, rng, max_depth=2, max_operators=2)
        assert child.size <= p.size
        assert child.root.kind.is_model
        if child.size == p.size:
            assert child.get((0,)).kind.category == p.get((0,)).kind.category


def test_single_model_mutations():
    rng = np.random.default_rng(4)
    p = Pipeline(Model(K.KNN, (), LEAF))
    children = [mutate(p, rng) for _ in range(500)]
    assert {c.size for c in children} == {1, 2}
    assert any(c.root.kind is not K.KNN for c in children if c.size == 1)
    assert any(isinstance(c.root.child, Combine) for c in children)


def test_shrink_reduces_size():
    rng = np.random.default_rng(5)
    p = Pipeline(Model(K.KNN, (), Combine(Transform(K.StandardScale, (), LEAF), LEAF)))
    sizes = {mutate(p, rng).size for _ in range(200)}
    assert {1, 2}.intersection(sizes)
    assert 3 in sizes


def test_mutation_is_deterministic():
    p = Pipeline(Model(K.KNN, (), Combine(Transform(K.StandardScale, (), LEAF), LEAF)))
    first = [mutate(p, np.random.default_rng(seed)) for seed in range(20)]
    assert first == [mutate(p, np.random.default_rng(seed)) for seed in range(20)]


def test_crossover_children():
    a = Pipeline(Model(K.KNN, (), Transform(K.StandardScale, (), LEAF)))
    b = Pipeline(Model(K.DecisionTree, (), Transform(K.RobustScale, (), LEAF)))
    expected = {
        a,
        Pipeline(Model(K.DecisionTree, (), Transform(K.StandardScale, (), LEAF))),
        Pipeline(Model(K.KNN, (), Transform(K.RobustScale, (), LEAF))),
        Pipeline(Model(K.KNN, (), LEAF)),
        Pipeline(Model(K.KNN, (), Transform(K.StandardScale, (), Transform(K.RobustScale, (), LEAF)))),
    }
    children = {crossover(a, b, np.random.default_rng(seed)) for seed in range(200)}
    assert children == expected


def test_crossover_of_single_models():
    a = Pipeline(Model(K.KNN, (), LEAF))
    b = Pipeline(Model(K.DecisionTree, (), LEAF))
    children = {crossover(a, b, np.random.default_rng(seed)) for seed in range(50)}
    assert children == {a, b}


def test_crossover_over_the_caps():
    a = Pipeline(Model(K.KNN, (), LEAF))
    b = Pipeline(Model(K.DecisionTree, (), Transform(K.RobustScale, (), LEAF)))
    children = {crossover(a, b, np.random.default_rng(seed), max_depth=1, max_operators=1) for seed in range(50)}
    assert children == {a, Pipeline(Model(K.DecisionTree, (), LEAF))}
