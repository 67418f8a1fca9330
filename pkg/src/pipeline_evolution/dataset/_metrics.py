import typing as _t

import numpy as np

from .exceptions import LengthMismatchError


def balanced_accuracy(truth: _t.Any, preds: _t.Any) -> float:
    """Unweighted mean of per-class recall.

    Only classes present in `truth` count. A constant predictor on `C` balanced or unbalanced classes scores
    exactly ``1/C``.

    Args:
        truth: True labels.
        preds: Predicted labels.

    Returns:
        Balanced accuracy in ``[0, 1]``.

    Raises:
        LengthMismatchError: If lengths differ, or are zero.

    Examples:
        >>> balanced_accuracy([0, 0, 1, 1], [0, 0, 0, 0])
        0.5
        >>> round(balanced_accuracy([0, 0, 0, 1, 1, 2], [0, 0, 1, 1, 0, 2]), 6)
        0.722222
    """
    truth = np.asarray(truth, dtype=np.int64)
    preds = np.asarray(preds, dtype=np.int64)
    if truth.shape != preds.shape or truth.ndim != 1:
        raise LengthMismatchError(f"Label vectors must have equal length, but got {truth.shape} and {preds.shape}.")
    if truth.size == 0:
        raise LengthMismatchError("Label vectors must not be empty.")

    classes, inverse = np.unique(truth, return_inverse=True)
    totals = np.bincount(inverse, minlength=len(classes))
    correct = np.bincount(inverse, weights=(truth == preds).astype(np.float64), minlength=len(classes))
    return float(np.mean(correct / totals))
