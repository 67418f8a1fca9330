import json

import numpy as np
import pytest

from pipeline_evolution.ops import OperatorKind as K
from pipeline_evolution.pipeline import (
    FORMAT,
    LEAF,
    Combine,
    Model,
    Pipeline,
    Transform,
    deserialize,
    make_params,
    random_pipeline,
    render,
    serialize,
)
from pipeline_evolution.pipeline.exceptions import PipelineParseError

STACKED = Pipeline(
    Model(
        K.GradientBoosting,
        make_params({"learning_rate": 0.123456, "max_depth": 2, "n_stages": 10}),
        Combine(Transform(K.RandomizedPCA, make_params({"n_components": 3}), LEAF), Model(K.DecisionTree, (), LEAF)),
    )
)

TWO_BRANCHES = Pipeline(
    Model(
        K.RandomForest,
        make_params({"n_trees": 100}),
        Model(
            K.LinearSVM,
            (),
            Combine(
                Transform(K.RandomizedPCA, make_params({"n_components": 2}), LEAF),
                Transform(K.SelectKBest, make_params({"k": 12}), Transform(K.PolynomialFeatures, (), LEAF)),
            ),
        ),
    )
)


def test_round_trip_two_branches_stacked_into_forest():
    text = serialize(TWO_BRANCHES)
    assert deserialize(text) == TWO_BRANCHES
    assert render(deserialize(text)) == (
        "RandomForest(LinearSVM(Combine(RandomizedPCA(Leaf, n_components=2), "
        "SelectKBest(PolynomialFeatures(Leaf), k=12))), n_trees=100)"
    )


def test_round_trip_random():
    rng = np.random.default_rng(99)
    for _ in range(50):
        p = random_pipeline(rng, max_depth=6)
        text = serialize(p)
        assert deserialize(text) == p
        assert serialize(deserialize(text)) == text


def test_document():
    doc = json.loads(serialize(STACKED))
    assert doc["format"] == FORMAT == "tpot-tree/1"
    assert doc["root"]["op"] == "GradientBoosting"
    assert [c["op"] for c in doc["root"]["children"][0]["children"]] == ["RandomizedPCA", "DecisionTree"]


def test_render():
    expected = (
        "GradientBoosting(Combine(RandomizedPCA(Leaf, n_components=3), DecisionTree(Leaf)), "
        "learning_rate=0.1235, max_depth=2, n_stages=10)"
    )
    assert render(STACKED) == expected
    assert str(STACKED) == expected


def test_none_param_round_trip():
    p = Pipeline(Model(K.DecisionTree, make_params({"max_depth": None}), LEAF))
    assert deserialize(serialize(p)) == p
    assert render(p) == "DecisionTree(Leaf, max_depth=None)"


def _doc(root):
    return json.dumps({"format": FORMAT, "root": root})


LEAF_DICT = {"op": "Leaf", "params": {}, "children": []}


@pytest.mark.parametrize(
    "text, location",
    [
        ("{", "line 1, column 2"),
        ('{"format": "tpot-tree/0", "root": {}}', "$.format"),
        ('{"format": "tpot-tree/1"}', "$"),
        ("[]", "$"),
        (_doc({"op": "SVC", "params": {}, "children": [LEAF_DICT]}), "$.root.op"),
        (_doc({"op": "KNN", "params": {}, "children": []}), "$.root.children"),
        (_doc({"op": "Combine", "params": {}, "children": [LEAF_DICT]}), "$.root.children"),
        (_doc({"op": "KNN", "params": {"n_neighbors": [1]}, "children": [LEAF_DICT]}), "$.root.params.n_neighbors"),
        (
            _doc({"op": "KNN", "params": {}, "children": [{"op": "Leaf", "params": {"a": 1}}]}),
            "$.root.children[0].params",
        ),
        (_doc({"op": "KNN", "params": {}, "children": [LEAF_DICT], "extra": 1}), "$.root"),
        (_doc({"op": "KNN", "params": {}, "children": [7]}), "$.root.children[0]"),
    ],
)
def test_parse_errors(text, location):
    with pytest.raises(PipelineParseError) as e:
        deserialize(text)
    assert e.value.location == location
    assert f"(at {location})" in str(e.value)


def test_deserialize_does_not_validate():
    p = deserialize(_doc(LEAF_DICT))
    assert p == Pipeline(LEAF)
