import pytest

from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import LEAF, Combine, Model, Pipeline, Transform, make_params, validate


def kinds(p, **kwargs):
    return [v.kind for v in validate(p, **kwargs)]


def test_valid():
    p = Pipeline(Model(K.KNN, make_params({"n_neighbors": 3}), Combine(LEAF, Model(K.DecisionTree, (), LEAF))))
    assert validate(p) == []


@pytest.mark.parametrize(
    "root, expected",
    [
        (LEAF, ["root-not-model"]),
        (Combine(LEAF, LEAF), ["root-not-model"]),
        (Transform(K.StandardScale, (), LEAF), ["root-not-model"]),
        (Model(K.StandardScale, (), LEAF), ["category"]),
        (Model(K.KNN, (), Transform(K.KNN, (), LEAF)), ["category"]),
        (Model(K.KNN, make_params({"n_neighbors": 0}), LEAF), ["schema"]),
        (Model(K.KNN, (), Transform(K.SelectKBest, make_params({"p": 1}), LEAF)), ["schema"]),
    ],
)
def test_violations(root, expected):
    assert kinds(Pipeline(root)) == expected


def test_violation_path():
    (violation,) = validate(Pipeline(Model(K.KNN, (), Transform(K.SelectKBest, make_params({"k": -1}), LEAF))))
    assert violation.path == (0,)
    assert str(violation).startswith("[schema] at [0]: SelectKBest")


def test_caps():
    node = LEAF
    for _ in range(4):
        node = Transform(K.StandardScale, (), node)
    p = Pipeline(Model(K.KNN, (), node))

    assert kinds(p, max_depth=4, max_operators=4) == ["depth", "size"]
    assert kinds(p, max_depth=5, max_operators=5) == []
    assert kinds(p, max_depth=None, max_operators=None) == []
