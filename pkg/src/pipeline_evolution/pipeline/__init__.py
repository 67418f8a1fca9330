"""Tree-shaped pipelines and their evaluation.

Data flows from the leaves to the root. Every leaf is a copy of the input data, transform nodes change the features,
combine nodes merge two branches and model nodes write the guess column, demoting any previous guess to a feature.
"""

from ._evaluate import (
    DEFAULT_BUDGET_MILLIS,
    INTERNAL_TRAIN_FRACTION,
    FitnessRecord,
    FittedPipeline,
    evaluate_pipeline,
    fit_pipeline,
)
from ._nodes import (
    LEAF,
    Combine,
    Leaf,
    Model,
    Node,
    Path,
    Pipeline,
    Transform,
    get_node,
    iter_nodes,
    make_params,
    replace_node,
)
from ._genome import PSET, from_tree, grow_tree, operator_count, to_tree, within_caps
from ._random import random_pipeline
from ._serialize import FORMAT, deserialize, from_document, render, serialize, to_document
from ._validate import DEFAULT_MAX_DEPTH, DEFAULT_MAX_OPERATORS, Violation, validate

__all__ = [
    "DEFAULT_BUDGET_MILLIS",
    "DEFAULT_MAX_DEPTH",
    "DEFAULT_MAX_OPERATORS",
    "FORMAT",
    "INTERNAL_TRAIN_FRACTION",
    "LEAF",
    "PSET",
    "Combine",
    "FitnessRecord",
    "FittedPipeline",
    "Leaf",
    "Model",
    "Node",
    "Path",
    "Pipeline",
    "Transform",
    "Violation",
    "deserialize",
    "evaluate_pipeline",
    "fit_pipeline",
    "from_document",
    "from_tree",
    "get_node",
    "grow_tree",
    "iter_nodes",
    "make_params",
    "operator_count",
    "random_pipeline",
    "render",
    "replace_node",
    "serialize",
    "to_document",
    "to_tree",
    "validate",
    "within_caps",
]
