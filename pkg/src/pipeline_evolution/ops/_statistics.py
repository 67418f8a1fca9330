"""Univariate statistics used by feature selectors."""

import numpy as np

from .. import types as _tt


def anova_f_scores(rows: _tt.Matrix, labels: _tt.LabelVector) -> _tt.Vector:
    """One-way ANOVA F-statistic of each feature against the class labels.

    Features with zero within-class variance get ``inf`` when classes differ in mean, and ``0`` when they do not.
    Undefined scores (e.g. a single class) are mapped to ``0``.

    Examples:
        >>> import numpy as np
        >>> rows = np.array([[0.0, 1.0], [0.1, 1.0], [1.0, 1.0], [1.1, 1.0]])
        >>> anova_f_scores(rows, np.array([0, 0, 1, 1])).round(1).tolist()
        [200.0, 0.0]
    """
    classes = np.unique(labels)
    n, m = rows.shape
    k = len(classes)
    if k < 2:
        return np.zeros(m)

    grand_mean = rows.mean(axis=0)
    ssb = np.zeros(m)
    ssw = np.zeros(m)
    for c in classes:
        group = rows[labels == c]
        mean = group.mean(axis=0)
        ssb += len(group) * (mean - grand_mean) ** 2
        ssw += ((group - mean) ** 2).sum(axis=0)

    df_between = k - 1
    df_within = n - k
    with np.errstate(divide="ignore", invalid="ignore"):
        scores = (ssb / df_between) / (ssw / df_within) if df_within > 0 else np.full(m, np.nan)

    scores = np.where((ssw <= 1e-12 * np.maximum(ssb, 1.0)) & (ssb > 1e-12), np.inf, scores)
    scores = np.where((ssb <= 1e-12) & (ssw <= 1e-12), 0.0, scores)
    return np.nan_to_num(scores, nan=0.0, posinf=np.inf)


def top_k_indices(scores: _tt.Vector, k: int) -> _tt.IndexVector:
    """Indices of the `k` highest scores, in ascending index order. Ties go to the lower index."""
    order = np.argsort(-scores, kind="stable")
    return np.sort(order[:k])
