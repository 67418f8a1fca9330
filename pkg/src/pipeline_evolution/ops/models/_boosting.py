import logging
import typing as _t

import numpy as np

from ... import types as _tt
from ...utils._deadline import NO_DEADLINE, Deadline
from ._tree import Tree, grow_tree

LOGGER = logging.getLogger(__package__).getChild("GradientBoostingClassifier")

_MAX_HALVINGS = 10


def softmax(scores: _tt.Matrix) -> _tt.Matrix:
    """Row-wise softmax."""
    shifted = scores - scores.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def multinomial_deviance(scores: _tt.Matrix, onehot: _tt.Matrix) -> float:
    """Mean negative log-likelihood of the softmax of `scores`."""
    shifted = scores - scores.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1))
    return float(np.mean(log_norm - (shifted * onehot).sum(axis=1)))


class GradientBoostingClassifier:
    """Multinomial gradient boosting with depth-limited regression trees.

    Every stage fits one regression tree per class to the negative gradient of the multinomial deviance, with Newton
    leaf values. The stage is then added with a step of ``learning_rate``, halved until the training loss does not
    increase. The loss after each stage is kept in :attr:`loss_history`.

    Args:
        class_count: Number of classes.
        n_stages: Number of boosting stages.
        learning_rate: Shrinkage.
        max_depth: Depth of each regression tree.
    """

    def __init__(
        self,
        class_count: int,
        n_stages: int = 100,
        learning_rate: float = 0.1,
        max_depth: int = 3,
    ) -> None:
        self.class_count = class_count
        self.n_stages = n_stages
        self.learning_rate = learning_rate
        self.max_depth = max_depth
        self.init_: _tt.Vector = np.zeros(class_count)
        self.stages_: list[tuple[float, list[Tree]]] = []
        self.loss_history: list[float] = []

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Run all boosting stages."""
        k = self.class_count
        onehot = np.eye(k)[labels]
        priors = np.maximum(onehot.mean(axis=0), 1e-12)
        self.init_ = np.log(priors)

        scores = np.tile(self.init_, (len(rows), 1))
        loss = multinomial_deviance(scores, onehot)
        self.loss_history = [loss]
        self.stages_ = []

        for stage in range(self.n_stages):
            deadline.check("gradient boosting")
            residuals = onehot - softmax(scores)
            trees = [self._fit_stage_tree(rows, residuals[:, c], deadline) for c in range(k)]
            update = np.column_stack([tree.value[tree.apply(rows), 0] for tree in trees])

            step = self.learning_rate
            for _ in range(_MAX_HALVINGS):
                candidate = scores + step * update
                candidate_loss = multinomial_deviance(candidate, onehot)
                if candidate_loss <= loss:
                    break
                step /= 2
            else:
                LOGGER.debug(f"Stopping after {stage} stages: no step reduces the training loss.")
                break

            scores, loss = candidate, candidate_loss
            self.stages_.append((step, trees))
            self.loss_history.append(loss)
        return self

    def _fit_stage_tree(self, rows: _tt.Matrix, residual: _tt.Vector, deadline: Deadline) -> Tree:
        tree = grow_tree(
            rows,
            np.column_stack([residual, residual**2]),
            criterion="squared_error",
            max_depth=self.max_depth,
            deadline=deadline,
        )
        leaves = tree.apply(rows)
        k = self.class_count
        numerator = np.bincount(leaves, weights=residual, minlength=tree.n_nodes)
        abs_r = np.abs(residual)
        denominator = np.bincount(leaves, weights=abs_r * (1 - abs_r), minlength=tree.n_nodes)
        with np.errstate(divide="ignore", invalid="ignore"):
            gamma = np.where(denominator > 1e-12, (k - 1) / k * numerator / denominator, 0.0)
        return tree.with_leaf_values(gamma[:, None])

    def decision_function(self, rows: _tt.Matrix) -> _tt.Matrix:
        """Raw class scores."""
        scores = np.tile(self.init_, (len(rows), 1))
        for step, trees in self.stages_:
            scores += step * np.column_stack([tree.value[tree.apply(rows), 0] for tree in trees])
        return scores

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Class with the highest score. Ties go to the lowest class."""
        return np.argmax(self.decision_function(rows), axis=1).astype(np.int64)
