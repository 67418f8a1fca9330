"""Fixtures and oracles for tests."""

from collections.abc import Sequence as _Sequence

import numpy as _np

from .datagen import PenetranceTable as _PenetranceTable
from .dataset import Dataset as _Dataset
from .evolve._pareto import Point as _Point
from .evolve._pareto import dominates as _dominates


def make_blobs(
    n_per_class: int = 50,
    class_count: int = 2,
    n_features: int = 4,
    *,
    separation: float = 6.0,
    seed: int = 0,
) -> _Dataset:
    """Gaussian blobs with unit variance, one per class, centered `separation` apart along the first feature.

    Examples:
        >>> make_blobs(10, 3)
        Dataset(n=30, m=4, classes=3)
    """
    rng = _np.random.default_rng(seed)
    labels = _np.repeat(_np.arange(class_count), n_per_class)
    rows = rng.standard_normal((len(labels), n_features))
    rows[:, 0] += separation * labels
    return _Dataset.from_arrays(rows, labels, class_count=class_count)


def make_threshold(n: int = 100, n_features: int = 3, *, threshold: float = 0.5, seed: int = 0) -> _Dataset:
    """Uniform features in ``[0, 1)``; the label is 1 if the first feature exceeds `threshold`.

    Examples:
        >>> ds = make_threshold(20)
        >>> bool(((ds.rows[:, 0] > 0.5) == (ds.labels == 1)).all())
        True
    """
    rng = _np.random.default_rng(seed)
    rows = rng.random((n, n_features))
    labels = (rows[:, 0] > threshold).astype(_np.int64)
    labels[:2] = [0, 1]
    rows[:2, 0] = [threshold / 2, (1 + threshold) / 2]
    return _Dataset.from_arrays(rows, labels, class_count=2)


def make_xor_table() -> _PenetranceTable:
    """A deterministic pure epistatic table at minor allele frequency 0.5.

    Disease occurs if exactly one of the loci is heterozygous.

    Examples:
        >>> make_xor_table().is_pure()
        True
    """
    return _PenetranceTable(0.5, _np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=_np.float64))


def brute_force_fronts(points: _Sequence[_Point]) -> list[set[int]]:
    """Non-dominated fronts by repeated pairwise comparison.

    The full dominance matrix is computed up front; each front is the set of remaining points that no other remaining
    point dominates.

    Examples:
        >>> brute_force_fronts([(0.9, 2), (0.8, 1), (0.7, 5)])
        [{0, 1}, {2}]
    """
    n = len(points)
    dominated_by = _np.array([[_dominates(points[j], points[i]) for j in range(n)] for i in range(n)], dtype=bool)
    dominated_by = dominated_by.reshape(n, n)
    remaining = _np.ones(n, dtype=bool)
    fronts = []
    while remaining.any():
        front = remaining & ~(dominated_by & remaining).any(axis=1)
        fronts.append(set(_np.flatnonzero(front).tolist()))
        remaining &= ~front
    return fronts
