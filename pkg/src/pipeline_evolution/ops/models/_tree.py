"""Binary decision trees grown by exhaustive threshold search (CART)."""

import dataclasses
import typing as _t

import numpy as np

from ... import types as _tt
from ...utils._deadline import NO_DEADLINE, Deadline

Criterion = _t.Literal["gini", "squared_error"]

_FEATURE_BLOCK = 256


@dataclasses.dataclass(frozen=True)
class Tree:
    """A fitted binary tree in array form. Rows with ``x[feature] <= threshold`` go left."""

    feature: _tt.IndexVector
    """Split feature per node; ``-1`` for leaves."""
    threshold: _tt.Vector
    left: _tt.IndexVector
    right: _tt.IndexVector
    value: _tt.Matrix
    """Per-node payload: class counts for classification, a single output for regression."""

    @property
    def n_nodes(self) -> int:
        """Total number of nodes."""
        return len(self.feature)

    @property
    def n_leaves(self) -> int:
        """Number of leaves."""
        return int(np.count_nonzero(self.feature < 0))

    def apply(self, rows: _tt.Matrix) -> _tt.IndexVector:
        """Leaf index of each row."""
        node = np.zeros(len(rows), dtype=np.intp)
        active = np.flatnonzero(self.feature[node] >= 0)
        while active.size:
            current = node[active]
            go_left = rows[active, self.feature[current]] <= self.threshold[current]
            node[active] = np.where(go_left, self.left[current], self.right[current])
            active = active[self.feature[node[active]] >= 0]
        return node

    def with_leaf_values(self, values: _tt.Matrix) -> "Tree":
        """Copy with a replaced value table."""
        return dataclasses.replace(self, value=values)


def _split_scores(
    xs: _tt.Matrix,
    sorted_targets: np.ndarray,
    total: _tt.Vector,
    criterion: Criterion,
) -> _tt.Matrix:
    """Impurity of every candidate split position; ``inf`` where no split is possible."""
    n = xs.shape[0]
    left = np.cumsum(sorted_targets, axis=0)[:-1]  # (n-1, f, d)
    right = total - left
    n_left = np.arange(1, n, dtype=np.float64)[:, None]
    n_right = n - n_left

    if criterion == "gini":
        gini_left = 1.0 - ((left / n_left[..., None]) ** 2).sum(axis=-1)
        gini_right = 1.0 - ((right / n_right[..., None]) ** 2).sum(axis=-1)
        impurity = (n_left * gini_left + n_right * gini_right) / n
    else:
        sse_left = left[..., 1] - left[..., 0] ** 2 / n_left
        sse_right = right[..., 1] - right[..., 0] ** 2 / n_right
        impurity = sse_left + sse_right

    return np.where(xs[1:] > xs[:-1], impurity, np.inf)


def _best_split(
    rows: _tt.Matrix,
    targets: np.ndarray,
    features: _tt.IndexVector,
    criterion: Criterion,
) -> tuple[int, float, float] | None:
    n = len(rows)
    if n < 2 or features.size == 0:
        return None

    total = targets.sum(axis=0)
    best: tuple[int, float, float] | None = None
    for start in range(0, features.size, _FEATURE_BLOCK):
        block = features[start : start + _FEATURE_BLOCK]
        xf = rows[:, block]
        order = np.argsort(xf, axis=0, kind="stable")
        xs = np.take_along_axis(xf, order, axis=0)
        scores = _split_scores(xs, targets[order], total, criterion)

        flat = int(np.argmin(scores))
        pos, j = np.unravel_index(flat, scores.shape)
        score = float(scores[pos, j])
        if not np.isfinite(score) or (best is not None and score >= best[2]):
            continue

        lo, hi = xs[pos, j], xs[pos + 1, j]
        threshold = (lo + hi) / 2.0
        if not lo <= threshold < hi:
            threshold = lo
        best = (int(block[j]), float(threshold), score)
    return best


def _node_impurity(targets: np.ndarray, criterion: Criterion) -> float:
    n = len(targets)
    total = targets.sum(axis=0)
    if criterion == "gini":
        return float(1.0 - ((total / n) ** 2).sum())
    return float(total[1] - total[0] ** 2 / n)


def grow_tree(
    rows: _tt.Matrix,
    targets: np.ndarray,
    *,
    criterion: Criterion,
    max_depth: int | None = None,
    max_features: int | None = None,
    rng: _tt.Rng | None = None,
    deadline: Deadline = NO_DEADLINE,
) -> Tree:
    """Grow a tree.

    Classification trees (``criterion="gini"``) take one-hot `targets` and split any impure node that has a valid
    threshold, even if the best split does not reduce impurity. Regression trees (``criterion="squared_error"``) take
    ``[r, r**2]`` columns and only split on strict improvement.

    Args:
        rows: Training matrix.
        targets: Target matrix, see above.
        criterion: Split criterion.
        max_depth: Depth cap. ``None`` means uncapped.
        max_features: Number of randomly drawn candidate features per node. When none of them can split the node, the
            remaining features are tried. ``None`` means all features, in order.
        rng: Required when `max_features` is set.
        deadline: Checked once per node.

    Returns:
        A :class:`Tree` whose value table holds the per-node target sums.
    """
    m = rows.shape[1]
    all_features = np.arange(m)

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    value: list[np.ndarray] = []

    def new_node(idx: _tt.IndexVector) -> int:
        feature.append(-1)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        value.append(targets[idx].sum(axis=0))
        return len(feature) - 1

    stack = [(new_node(np.arange(len(rows))), np.arange(len(rows)), 0)]
    while stack:
        deadline.check("tree growth")
        node, idx, depth = stack.pop()
        if max_depth is not None and depth >= max_depth:
            continue

        node_targets = targets[idx]
        parent = _node_impurity(node_targets, criterion)
        if parent <= 1e-12:
            continue

        node_rows = rows[idx]
        if max_features is None or max_features >= m:
            split = _best_split(node_rows, node_targets, all_features, criterion)
        else:
            assert rng is not None  # noqa: S101
            permuted = rng.permutation(m)
            split = _best_split(node_rows, node_targets, permuted[:max_features], criterion)
            if split is None:
                split = _best_split(node_rows, node_targets, permuted[max_features:], criterion)

        if split is None:
            continue
        f, t, score = split
        if criterion == "squared_error" and score >= parent - 1e-12:
            continue

        go_left = node_rows[:, f] <= t
        left_idx, right_idx = idx[go_left], idx[~go_left]
        feature[node] = f
        threshold[node] = t
        left[node] = new_node(left_idx)
        right[node] = new_node(right_idx)
        stack.append((right[node], right_idx, depth + 1))
        stack.append((left[node], left_idx, depth + 1))

    return Tree(
        feature=np.array(feature, dtype=np.intp),
        threshold=np.array(threshold, dtype=np.float64),
        left=np.array(left, dtype=np.intp),
        right=np.array(right, dtype=np.intp),
        value=np.array(value, dtype=np.float64),
    )


class DecisionTreeClassifier:
    """CART classifier with Gini impurity.

    Args:
        class_count: Number of classes.
        max_depth: Depth cap. ``None`` means uncapped.
        max_features: Features considered per split, see :func:`grow_tree`.
        seed: Seed for feature subsampling.
    """

    def __init__(
        self,
        class_count: int,
        max_depth: int | None = None,
        max_features: int | None = None,
        seed: int | _tt.Rng = 0,
    ) -> None:
        self.class_count = class_count
        self.max_depth = max_depth
        self.max_features = max_features
        self._rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
        self.tree_: Tree | None = None

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Grow the tree."""
        onehot = np.eye(self.class_count)[labels]
        self.tree_ = grow_tree(
            rows,
            onehot,
            criterion="gini",
            max_depth=self.max_depth,
            max_features=self.max_features,
            rng=self._rng,
            deadline=deadline,
        )
        return self

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Majority class of the leaf of each row. Ties go to the lowest class."""
        assert self.tree_ is not None  # noqa: S101
        counts = self.tree_.value[self.tree_.apply(rows)]
        return np.argmax(counts, axis=1).astype(np.int64)
