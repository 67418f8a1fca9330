import dataclasses
import itertools
import logging
import math
import typing as _t
from abc import ABC, abstractmethod

import numpy as np

from .. import types as _tt
from ..dataset import Dataset, make_unique
from ..utils._deadline import NO_DEADLINE, Deadline
from ._kinds import OperatorKind
from ._pca import principal_components
from ._schema import resolve_params
from ._statistics import anova_f_scores, top_k_indices
from .exceptions import DegenerateOutputError, OperatorError, ShapeError
from .models import LogisticRegression

LOGGER = logging.getLogger(__package__).getChild("fit_transform")

State = dict[str, np.ndarray]
"""Learned state of a transform."""


class TransformOperator(ABC):
    """Base class for non-model operators."""

    @abstractmethod
    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        """Learn state from `train`.

        Returns:
            A tuple ``(state, output_names)``.
        """

    @abstractmethod
    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        """Transform `rows` using learned `state`."""


class StandardScale(TransformOperator):
    """Center on the mean, scale by the population standard deviation. Constant columns become zero."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        rows = train.rows
        std = rows.std(axis=0)
        constant = np.ptp(rows, axis=0) == 0
        return {"center": rows.mean(axis=0), "scale": np.where(constant, np.inf, std)}, list(train.feature_names)

    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        return (rows - state["center"]) / state["scale"]


class RobustScale(TransformOperator):
    """Center on the median, scale by the inter-quartile range. Columns with zero IQR become zero."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        q1, median, q3 = np.percentile(train.rows, [25, 50, 75], axis=0)
        iqr = q3 - q1
        return {"center": median, "scale": np.where(iqr > 0, iqr, np.inf)}, list(train.feature_names)

    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        return (rows - state["center"]) / state["scale"]


class PolynomialFeatures(TransformOperator):
    """Degree-2 expansion: bias, original features, squares and pairwise products."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        names = ["1", *train.feature_names]
        pairs = list(itertools.combinations_with_replacement(range(len(names)), 2))
        left = np.array([i for i, _ in pairs], dtype=np.intp)
        right = np.array([j for _, j in pairs], dtype=np.intp)

        output_names = []
        for i, j in pairs:
            if i == 0:
                output_names.append("bias" if j == 0 else names[j])
            else:
                output_names.append(f"{names[i]}^2" if i == j else f"{names[i]}*{names[j]}")
        return {"left": left, "right": right}, make_unique(output_names)

    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        extended = np.hstack([np.ones((len(rows), 1)), rows])
        return extended[:, state["left"]] * extended[:, state["right"]]


class RandomizedPCA(TransformOperator):
    """Projection onto the top principal components. The number of components is clamped to ``[1, min(m, n) - 1]``."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        n, m = train.rows.shape
        k = max(1, min(params["n_components"], min(m, n) - 1))
        mean = train.rows.mean(axis=0)
        components = principal_components(
            train.rows - mean,
            k,
            iterated_power=params["iterated_power"],
            rng=rng,
            deadline=deadline,
        )
        return {"mean": mean, "components": components}, [f"pc{i}" for i in range(len(components))]

    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        return (rows - state["mean"]) @ state["components"].T


class _Selector(TransformOperator):
    def apply(self, state: State, rows: _tt.Matrix) -> _tt.Matrix:
        return rows[:, state["keep"]]

    @staticmethod
    def _result(train: Dataset, keep: _tt.IndexVector) -> tuple[State, list[str]]:
        keep = np.asarray(keep, dtype=np.intp)
        return {"keep": keep}, [train.feature_names[i] for i in keep]


class VarianceThreshold(_Selector):
    """Keep features whose population variance is at least the threshold. A threshold of zero drops constant columns."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        threshold = params["threshold"]
        if threshold == 0:
            keep = np.flatnonzero(np.ptp(train.rows, axis=0) > 0)
        else:
            keep = np.flatnonzero(train.rows.var(axis=0) >= threshold)
        return self._result(train, keep)


class SelectKBest(_Selector):
    """Keep the `k` features with the highest ANOVA F-score. `k` is clamped to the width."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        k = min(params["k"], train.n_features)
        return self._result(train, top_k_indices(anova_f_scores(train.rows, train.labels), k))


class SelectPercentile(_Selector):
    """Keep the top ``ceil(percentile * m / 100)`` features by ANOVA F-score."""

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        k = max(1, math.ceil(params["percentile"] * train.n_features / 100))
        return self._result(train, top_k_indices(anova_f_scores(train.rows, train.labels), k))


class RFE(_Selector):
    """Recursive feature elimination ranked by the weights of an L2 logistic model.

    Each round drops the ``max(1, 10%)`` remaining features with the smallest weight norm (over classes), never going
    below `k`.
    """

    RANKER_ALPHA = 1e-2
    RANKER_ITERATIONS = 100

    def fit(
        self,
        train: Dataset,
        params: dict[str, _t.Any],
        rng: _tt.Rng,
        deadline: Deadline,
    ) -> tuple[State, list[str]]:
        k = min(params["k"], train.n_features)
        remaining = np.arange(train.n_features)
        while len(remaining) > k:
            deadline.check("recursive feature elimination")
            ranker = LogisticRegression(train.class_count, alpha=self.RANKER_ALPHA, max_iter=self.RANKER_ITERATIONS)
            ranker.fit(train.rows[:, remaining], train.labels, deadline)
            importance = np.linalg.norm(ranker.coef_, axis=1)
            step = min(max(1, len(remaining) // 10), len(remaining) - k)
            drop = np.argsort(importance, kind="stable")[:step]
            remaining = np.delete(remaining, drop)
        return self._result(train, remaining)


OPERATORS: dict[OperatorKind, TransformOperator] = {
    OperatorKind.StandardScale: StandardScale(),
    OperatorKind.RobustScale: RobustScale(),
    OperatorKind.PolynomialFeatures: PolynomialFeatures(),
    OperatorKind.RandomizedPCA: RandomizedPCA(),
    OperatorKind.VarianceThreshold: VarianceThreshold(),
    OperatorKind.SelectKBest: SelectKBest(),
    OperatorKind.SelectPercentile: SelectPercentile(),
    OperatorKind.RFE: RFE(),
}
"""Implementation of every non-model operator."""


@dataclasses.dataclass(frozen=True, eq=False)
class FittedTransform:
    """A non-model operator with learned state."""

    kind: OperatorKind
    params: _t.Mapping[str, _t.Any]
    """Resolved parameters, including defaults."""
    input_names: tuple[str, ...]
    """Feature names seen during fitting."""
    output_names: tuple[str, ...]
    """Names of the produced features."""
    state: _t.Mapping[str, np.ndarray]
    """Learned statistics: means and scales, kept column indices, projection bases."""

    @property
    def n_features_in(self) -> int:
        """Width the transform was fitted on."""
        return len(self.input_names)

    @property
    def n_features_out(self) -> int:
        """Width of transformed data."""
        return len(self.output_names)


def _transform(fitted: FittedTransform, ds: Dataset) -> Dataset:
    rows = OPERATORS[fitted.kind].apply(dict(fitted.state), ds.rows)
    if not np.isfinite(rows).all():
        raise DegenerateOutputError(f"{fitted.kind.value} produced non-finite values for {ds}.")
    return ds.with_features(rows, fitted.output_names)


def fit_transform(
    kind: OperatorKind.ParseType,
    params: _tt.Params,
    train: Dataset,
    seed: int = 0,
    deadline: Deadline | None = None,
) -> tuple[FittedTransform, Dataset]:
    """Fit a non-model operator on `train` and transform it.

    Statistics are learned from `train` only. Labels and guess are carried through unchanged.

    Args:
        kind: A preprocessor, decomposition or selector.
        params: Parameters of `kind`. Omitted parameters use schema defaults.
        train: Training data with at least 2 rows.
        seed: Seed for randomized operators.
        deadline: Optional cooperative time budget.

    Returns:
        A tuple ``(fitted, transformed_train)``.

    Raises:
        OperatorError: If `kind` is a model, or `train` has fewer than 2 rows.
        ParameterError: If `params` do not validate.
        DegenerateOutputError: If the output has no columns, or non-finite values.

    Examples:
        >>> ds = Dataset.from_arrays([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]], [0, 1, 1])
        >>> fitted, out = fit_transform("VarianceThreshold", {"threshold": 0.0}, ds)
        >>> out.feature_names
        ('x0',)
    """
    kind = OperatorKind.parse(kind)
    if kind.is_model:
        raise OperatorError(f"Cannot fit {kind.value} as a transform: use train_model() for models.")
    if train.n_rows < 2:
        raise OperatorError(f"Cannot fit {kind.value} on {train}: at least 2 rows are required.")

    resolved = resolve_params(kind, params)
    state, output_names = OPERATORS[kind].fit(train, resolved, np.random.default_rng(seed), deadline or NO_DEADLINE)
    if not output_names:
        raise DegenerateOutputError(f"{kind.value}({resolved}) removed every feature of {train}.")

    fitted = FittedTransform(kind, resolved, train.feature_names, tuple(output_names), state)
    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(f"Fitted {kind.value}({resolved}): {fitted.n_features_in} -> {fitted.n_features_out} features.")
    return fitted, _transform(fitted, train)


def apply_transform(t: FittedTransform, ds: Dataset) -> Dataset:
    """Transform `ds` using statistics learned at fit time.

    Args:
        t: A fitted transform.
        ds: Data of the fitted width.

    Returns:
        Transformed data, with labels and guess unchanged.

    Raises:
        ShapeError: If the width of `ds` differs from the fitted width.
        DegenerateOutputError: If the output has non-finite values.
    """
    if ds.n_features != t.n_features_in:
        raise ShapeError(t.n_features_in, ds.n_features, what=f"{t.kind.value} transform")
    return _transform(t, ds)
