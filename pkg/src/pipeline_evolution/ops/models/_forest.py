import typing as _t

import numpy as np

from ... import types as _tt
from ...utils._deadline import NO_DEADLINE, Deadline
from ._tree import DecisionTreeClassifier


class RandomForestClassifier:
    """Bagged CART trees with ``sqrt(m)`` candidate features per split.

    Args:
        class_count: Number of classes.
        n_trees: Number of trees.
        max_depth: Depth cap of every tree. ``None`` means uncapped.
        seed: Seed for bootstrap samples and feature subsampling.
    """

    def __init__(self, class_count: int, n_trees: int = 100, max_depth: int | None = None, seed: int = 0) -> None:
        self.class_count = class_count
        self.n_trees = n_trees
        self.max_depth = max_depth
        self.seed = seed
        self.trees_: list[DecisionTreeClassifier] = []

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Grow `n_trees` trees on bootstrap samples."""
        rng = np.random.default_rng(self.seed)
        n, m = rows.shape
        max_features = max(1, int(np.sqrt(m)))

        self.trees_ = []
        for _ in range(self.n_trees):
            deadline.check("random forest")
            sample = rng.integers(0, n, size=n)
            tree = DecisionTreeClassifier(self.class_count, self.max_depth, max_features, seed=rng)
            self.trees_.append(tree.fit(rows[sample], labels[sample], deadline))
        return self

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Majority vote over trees. Ties go to the lowest class."""
        votes = np.zeros((len(rows), self.class_count), dtype=np.int64)
        index = np.arange(len(rows))
        for tree in self.trees_:
            np.add.at(votes, (index, tree.predict(rows)), 1)
        return np.argmax(votes, axis=1).astype(np.int64)
