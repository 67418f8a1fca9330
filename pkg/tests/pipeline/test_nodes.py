import pytest

from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import LEAF, Combine, Model, Pipeline, Transform, make_params

TREE = Pipeline(
    Model(
        K.LogisticRegression,
        make_params({"alpha": 0.1}),
        Combine(Transform(K.StandardScale, (), LEAF), Model(K.KNN, (), Transform(K.RobustScale, (), LEAF))),
    )
)


def test_size_and_depth():
    assert TREE.size == 5
    assert TREE.depth == 4
    assert Pipeline(LEAF).size == 0
    assert Pipeline(LEAF).depth == 0


def test_paths_are_preorder():
    paths = [path for path, _ in TREE.nodes()]
    assert paths == [(), (0,), (0, 0), (0, 0, 0), (0, 1), (0, 1, 0), (0, 1, 0, 0)]


def test_get():
    assert TREE.get((0, 1)).kind is K.KNN
    assert TREE.get((0, 1, 0, 0)) is LEAF
    with pytest.raises(KeyError):
        TREE.get((0, 2))


def test_replace_is_persistent():
    replaced = TREE.replace((0, 1), LEAF)
    assert replaced.size == 3
    assert TREE.size == 5
    assert replaced.get((0, 0)) is TREE.get((0, 0))


def test_replace_root():
    assert TREE.replace((), LEAF) == Pipeline(LEAF)


def test_make_params_sorts():
    assert make_params({"b": 1, "a": None}) == (("a", None), ("b", 1))
    assert make_params(None) == ()


def test_structural_equality():
    same = Pipeline(
        Model(
            K.LogisticRegression,
            make_params({"alpha": 0.1}),
            Combine(Transform(K.StandardScale, (), LEAF), Model(K.KNN, (), Transform(K.RobustScale, (), LEAF))),
        )
    )
    assert same == TREE
    assert hash(same) == hash(TREE)
