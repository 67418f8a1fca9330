"""L2-regularized linear classifiers, fitted by full-batch first-order methods on standardized features."""

import typing as _t

import numpy as np

from ... import types as _tt
from ...utils._deadline import NO_DEADLINE, Deadline
from ._boosting import softmax

_CHECK_EVERY = 25


def standardize(rows: _tt.Matrix) -> tuple[_tt.Vector, _tt.Vector]:
    """Column means and population standard deviations. Zero deviations are replaced by one."""
    mean = rows.mean(axis=0)
    std = rows.std(axis=0)
    return mean, np.where(std > 1e-12, std, 1.0)


def with_intercept(rows: _tt.Matrix) -> _tt.Matrix:
    """Append a column of ones."""
    return np.hstack([rows, np.ones((len(rows), 1))])


def spectral_norm_squared(rows: _tt.Matrix, iterations: int = 30) -> float:
    """Estimate the largest eigenvalue of ``rows.T @ rows`` by power iteration."""
    v = np.ones(rows.shape[1]) / np.sqrt(rows.shape[1])
    estimate = 0.0
    for _ in range(iterations):
        w = rows.T @ (rows @ v)
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            return 0.0
        v = w / norm
        estimate = norm
    return estimate


def loss_and_gradient(
    theta: _tt.Matrix,
    rows: _tt.Matrix,
    labels: _tt.LabelVector,
    class_count: int,
    alpha: float,
) -> tuple[float, _tt.Matrix]:
    """Multinomial logistic loss with an L2 penalty, and its gradient.

    The loss is the mean cross-entropy plus ``alpha/2 * ||W||**2``, where `W` is every row of `theta` except the last
    (the intercept, which is not penalized).

    Args:
        theta: Weights of shape ``(m + 1, class_count)``; the last row is the intercept.
        rows: An ``(n, m)`` matrix.
        labels: Class labels.
        class_count: Number of classes.
        alpha: Penalty strength.

    Returns:
        A tuple ``(loss, gradient)`` where `gradient` has the shape of `theta`.
    """
    x1 = with_intercept(rows)
    onehot = np.eye(class_count)[labels]
    scores = x1 @ theta
    shifted = scores - scores.max(axis=1, keepdims=True)
    log_norm = np.log(np.exp(shifted).sum(axis=1))
    n = len(rows)

    penalized = theta[:-1]
    loss = float(np.mean(log_norm - (shifted * onehot).sum(axis=1))) + 0.5 * alpha * float((penalized**2).sum())

    gradient = x1.T @ (softmax(scores) - onehot) / n
    gradient[:-1] += alpha * penalized
    return loss, gradient


class LogisticRegression:
    """Multinomial logistic regression fitted by gradient descent with step ``1/L``.

    Args:
        class_count: Number of classes.
        alpha: L2 penalty strength.
        max_iter: Maximum number of gradient steps.
        tol: Stop when the gradient norm drops below this value.
    """

    def __init__(self, class_count: int, alpha: float = 1e-3, max_iter: int = 300, tol: float = 1e-6) -> None:
        self.class_count = class_count
        self.alpha = alpha
        self.max_iter = max_iter
        self.tol = tol
        self.mean_: _tt.Vector = np.zeros(0)
        self.scale_: _tt.Vector = np.ones(0)
        self.theta_: _tt.Matrix = np.zeros((0, class_count))
        self.n_iter_ = 0

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Minimize :func:`loss_and_gradient`."""
        self.mean_, self.scale_ = standardize(rows)
        z = (rows - self.mean_) / self.scale_
        n, m = z.shape

        lipschitz = 0.5 * spectral_norm_squared(with_intercept(z)) / n + self.alpha
        step = 1.0 / max(lipschitz, 1e-12)

        theta = np.zeros((m + 1, self.class_count))
        for i in range(self.max_iter):
            if i % _CHECK_EVERY == 0:
                deadline.check("logistic regression")
            _, gradient = loss_and_gradient(theta, z, labels, self.class_count, self.alpha)
            if np.linalg.norm(gradient) < self.tol:
                break
            theta -= step * gradient
        self.n_iter_ = i + 1 if self.max_iter else 0
        self.theta_ = theta
        return self

    @property
    def coef_(self) -> _tt.Matrix:
        """Weights on the standardized features, shape ``(m, class_count)``."""
        return self.theta_[:-1]

    def decision_function(self, rows: _tt.Matrix) -> _tt.Matrix:
        """Raw class scores."""
        return with_intercept((rows - self.mean_) / self.scale_) @ self.theta_

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Class with the highest score. Ties go to the lowest class."""
        return np.argmax(self.decision_function(rows), axis=1).astype(np.int64)


class LinearSVM:
    """One-vs-rest linear SVM; hinge loss with an L2 penalty, minimized by averaged subgradient descent.

    Args:
        class_count: Number of classes.
        alpha: L2 penalty strength.
        max_iter: Number of subgradient steps. The second half of the iterates is averaged.
    """

    def __init__(self, class_count: int, alpha: float = 1e-3, max_iter: int = 300) -> None:
        self.class_count = class_count
        self.alpha = alpha
        self.max_iter = max_iter
        self.mean_: _tt.Vector = np.zeros(0)
        self.scale_: _tt.Vector = np.ones(0)
        self.theta_: _tt.Matrix = np.zeros((0, class_count))

    def fit(self, rows: _tt.Matrix, labels: _tt.LabelVector, deadline: Deadline = NO_DEADLINE) -> _t.Self:
        """Run subgradient descent for all classes at once."""
        self.mean_, self.scale_ = standardize(rows)
        x1 = with_intercept((rows - self.mean_) / self.scale_)
        n, d = x1.shape

        signs = np.where(np.eye(self.class_count)[labels] > 0, 1.0, -1.0)
        eta0 = 1.0 / np.sqrt(d)
        theta = np.zeros((d, self.class_count))
        average = np.zeros_like(theta)
        averaged = 0
        for t in range(1, self.max_iter + 1):
            if t % _CHECK_EVERY == 0:
                deadline.check("linear SVM")
            margins = signs * (x1 @ theta)
            active = (margins < 1.0) * signs
            gradient = -(x1.T @ active) / n
            gradient[:-1] += self.alpha * theta[:-1]
            theta -= eta0 / np.sqrt(t) * gradient
            if 2 * t > self.max_iter:
                average += theta
                averaged += 1

        self.theta_ = average / max(averaged, 1)
        return self

    def decision_function(self, rows: _tt.Matrix) -> _tt.Matrix:
        """One-vs-rest margins."""
        return with_intercept((rows - self.mean_) / self.scale_) @ self.theta_

    def predict(self, rows: _tt.Matrix) -> _tt.LabelVector:
        """Class with the largest margin. Ties go to the lowest class."""
        return np.argmax(self.decision_function(rows), axis=1).astype(np.int64)
