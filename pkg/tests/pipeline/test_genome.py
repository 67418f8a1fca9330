import numpy as np
import pytest
from deap import gp

from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import (
    LEAF,
    PSET,
    Combine,
    Model,
    Pipeline,
    Transform,
    from_tree,
    grow_tree,
    make_params,
    operator_count,
    random_pipeline,
    to_tree,
    within_caps,
)
from pipeline_evolution.utils import seeded_random

STACKED = Pipeline(
    Model(
        K.RandomForest,
        make_params({"n_estimators": 100, "max_features": "sqrt"}),
        Combine(
            Transform(K.PolynomialFeatures, (), Model(K.LogisticRegression, make_params({"C": 0.5}), LEAF)),
            Transform(K.SelectKBest, make_params({"k": 2}), Transform(K.RobustScale, (), LEAF)),
        ),
    )
)


def test_structure():
    tree = to_tree(STACKED)
    names = [node.name for node in tree if isinstance(node, gp.Primitive)]
    assert names == ["Classify", "Combine", "Preprocess", "Stack", "Select", "Preprocess"]
    assert tree.height == STACKED.depth
    assert operator_count(tree) == STACKED.size
    assert from_tree(tree) == STACKED


def test_random_pipelines_convert_back():
    rng = np.random.default_rng(11)
    for _ in range(100):
        p = random_pipeline(rng, 6, 12)
        tree = to_tree(p)
        assert from_tree(tree) == p
        assert (tree.height, operator_count(tree)) == (p.depth, p.size)


def test_incomplete_expression():
    tree = to_tree(STACKED)
    with pytest.raises(ValueError, match="Not a complete pipeline"):
        from_tree(gp.PrimitiveTree(tree[1:]))


@pytest.mark.parametrize("max_depth, max_operators", [(1, 1), (3, 2), (5, 20)])
def test_grow_tree(max_depth, max_operators):
    with seeded_random(np.random.default_rng(max_depth)):
        trees = [grow_tree(max_depth, max_operators) for _ in range(100)]
    assert all(within_caps(tree, max_depth, max_operators) for tree in trees)
    assert all(tree.root.ret is PSET.ret for tree in trees)
