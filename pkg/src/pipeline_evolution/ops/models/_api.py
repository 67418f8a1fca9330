import dataclasses
import logging
import typing as _t

import numpy as np

from ... import types as _tt
from ...dataset import Dataset
from ...utils._deadline import NO_DEADLINE, Deadline
from .._kinds import Category, OperatorKind
from .._schema import resolve_params
from ..exceptions import OperatorError, ShapeError, TrainingError
from ._boosting import GradientBoostingClassifier
from ._forest import RandomForestClassifier
from ._knn import KNeighborsClassifier
from ._linear import LinearSVM, LogisticRegression
from ._tree import DecisionTreeClassifier

LOGGER = logging.getLogger(__package__).getChild("train_model")


class Estimator(_t.Protocol):
    """Interface of the classifier implementations."""

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = ...) -> _t.Self:
        """Train the classifier."""

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Predict labels."""


@dataclasses.dataclass(frozen=True, eq=False)
class FittedModel:
    """A trained classifier."""

    kind: OperatorKind
    params: _t.Mapping[str, _t.Any]
    """Resolved parameters, including defaults."""
    n_features: int
    """Training width."""
    class_count: int
    estimator: Estimator
    """Learned state: tree nodes, forests, weight vectors or stored neighbors."""


def _make_estimator(kind: OperatorKind, params: dict[str, _t.Any], class_count: int, seed: int) -> Estimator:
    if kind is OperatorKind.DecisionTree:
        return DecisionTreeClassifier(class_count, max_depth=params["max_depth"], seed=seed)
    if kind is OperatorKind.RandomForest:
        return RandomForestClassifier(class_count, n_trees=params["n_trees"], max_depth=params["max_depth"], seed=seed)
    if kind is OperatorKind.GradientBoosting:
        return GradientBoostingClassifier(
            class_count,
            n_stages=params["n_stages"],
            learning_rate=params["learning_rate"],
            max_depth=params["max_depth"],
        )
    if kind is OperatorKind.LogisticRegression:
        return LogisticRegression(class_count, alpha=params["alpha"])
    if kind is OperatorKind.LinearSVM:
        return LinearSVM(class_count, alpha=params["alpha"])
    if kind is OperatorKind.KNN:
        return KNeighborsClassifier(class_count, n_neighbors=params["n_neighbors"])
    raise AssertionError(f"Unhandled model {kind=}.")  # pragma: no cover


def train_model(
    kind: OperatorKind.ParseType,
    params: _tt.Params,
    train: Dataset,
    seed: int = 0,
    deadline: Deadline | None = None,
) -> FittedModel:
    """Train a classifier on the features of `train`.

    Args:
        kind: A model kind.
        params: Parameters of `kind`. Omitted parameters use schema defaults.
        train: Training data. Every class in ``0..C-1`` must have at least one row.
        seed: Seed for randomized models.
        deadline: Optional cooperative time budget.

    Returns:
        A :class:`FittedModel`.

    Raises:
        OperatorError: If `kind` is not a model.
        ParameterError: If `params` do not validate.
        TrainingError: If some class is empty, or the features are not finite.
        BudgetExceededError: If the `deadline` expires.

    Examples:
        >>> ds = Dataset.from_arrays([[0.0], [1.0], [2.0], [3.0]], [0, 0, 1, 1])
        >>> model = train_model("KNN", {"n_neighbors": 1}, ds)
        >>> predict(model, ds).tolist()
        [0, 0, 1, 1]
    """
    kind = OperatorKind.parse(kind)
    if kind.category is not Category.MODEL:
        raise OperatorError(f"Cannot train {kind.value}: category={kind.category.value} is not a model.")
    resolved = resolve_params(kind, params)

    counts = train.class_counts()
    empty = [c for c, n in counts.items() if n == 0]
    if empty:
        raise TrainingError(f"Cannot train {kind.value}: classes {empty} have no training rows ({train}).")
    if train.n_features == 0:
        raise TrainingError(f"Cannot train {kind.value} on {train}: there are no features.")
    if not np.isfinite(train.rows).all():
        raise TrainingError(f"Cannot train {kind.value}: training features contain non-finite values.")

    estimator = _make_estimator(kind, resolved, train.class_count, seed)
    estimator.fit(train.rows, train.labels, deadline or NO_DEADLINE)

    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(f"Trained {kind.value}({resolved}) on {train}.")

    return FittedModel(kind, resolved, train.n_features, train.class_count, estimator)


def predict(model: FittedModel, ds: Dataset) -> _tt.LabelVector:
    """Predict labels for the rows of `ds`.

    Args:
        model: A trained model.
        ds: Data of the training width.

    Returns:
        Labels in ``0..C-1``.

    Raises:
        ShapeError: If the width of `ds` differs from the training width.
    """
    if ds.n_features != model.n_features:
        raise ShapeError(model.n_features, ds.n_features, what=f"{model.kind.value} model")
    rows = np.nan_to_num(ds.rows, nan=0.0, posinf=np.finfo(np.float64).max, neginf=np.finfo(np.float64).min)
    return np.asarray(model.estimator.predict(rows), dtype=np.int64)
