import typing as _t

import numpy as np

from ... import types as _tt
from ...utils._deadline import NO_DEADLINE, Deadline

_BLOCK_ELEMENTS = 4_000_000


class KNeighborsClassifier:
    """Majority vote among the `n_neighbors` nearest training rows (Euclidean).

    Distance ties are broken by training row order, vote ties by the lowest class.

    Args:
        class_count: Number of classes.
        n_neighbors: Number of neighbors. Clamped to the number of training rows.
    """

    def __init__(self, class_count: int, n_neighbors: int = 5) -> None:
        self.class_count = class_count
        self.n_neighbors = n_neighbors
        self.rows_: _tt.Matrix = np.zeros((0, 0))
        self.labels_: _tt.LabelVector = np.zeros(0, dtype=np.int64)

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Store the training rows."""
        self.rows_ = np.array(rows, dtype=np.float64)
        self.labels_ = np.array(labels, dtype=np.int64)
        return self

    def kneighbors(self, rows: _tt.Matrix, deadline: Deadline = NO_DEADLINE) -> _tt.IndexVector:
        """Indices of the nearest training rows, shape ``(len(rows), k)``."""
        n_train = len(self.rows_)
        k = min(self.n_neighbors, n_train)
        block = max(1, _BLOCK_ELEMENTS // max(1, n_train * self.rows_.shape[1]))

        parts = []
        for start in range(0, len(rows), block):
            deadline.check("nearest neighbors")
            query = rows[start : start + block]
            distances = ((query[:, None, :] - self.rows_[None, :, :]) ** 2).sum(axis=2)
            parts.append(np.argsort(distances, axis=1, kind="stable")[:, :k])
        return np.vstack(parts) if parts else np.zeros((0, k), dtype=np.intp)

    def predict(self, rows: _tt.Matrix, deadline: Deadline = NO_DEADLINE) -> _tt.LabelVector:
        """Majority label among the nearest neighbors."""
        neighbors = self.kneighbors(rows, deadline)
        votes = np.zeros((len(rows), self.class_count), dtype=np.int64)
        index = np.repeat(np.arange(len(rows)), neighbors.shape[1])
        np.add.at(votes, (index, self.labels_[neighbors].ravel()), 1)
        return np.argmax(votes, axis=1).astype(np.int64)
