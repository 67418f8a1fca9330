import logging
import math
import typing as _t

import numpy as np

from ..utils.logging import cast_unsafe
from ._dataset import Dataset
from .exceptions import DatasetError, SplitInfeasibleError

LOGGER = logging.getLogger(__package__).getChild("split")


class SplitPair(_t.NamedTuple):
    """Train/test halves of a :class:`.Dataset`."""

    train: Dataset
    """Training rows."""
    test: Dataset
    """Held-out rows."""


def allocate_train_counts(counts: dict[int, int], train_fraction: float) -> dict[int, int]:
    """Number of training rows per class.

    Each class gets ``floor(train_fraction * n_c)`` rows; the remaining ``round(train_fraction * n)`` rows are handed
    out by largest fractional remainder (lower class identifier first on ties). Counts are clamped to
    ``[1, n_c - 1]`` so every class appears on both sides.

    Examples:
        >>> allocate_train_counts({0: 4, 1: 4}, 0.75)
        {0: 3, 1: 3}
        >>> allocate_train_counts({0: 50, 1: 50}, 0.75)
        {0: 38, 1: 37}
    """
    n = sum(counts.values())
    ideal = {c: train_fraction * k for c, k in counts.items()}
    ans = {c: math.floor(v) for c, v in ideal.items()}

    missing = math.floor(train_fraction * n + 0.5) - sum(ans.values())
    by_remainder = sorted(ideal, key=lambda c: (-(ideal[c] - ans[c]), c))
    for c in by_remainder[: max(0, missing)]:
        ans[c] += 1

    return {c: min(max(ans[c], 1), counts[c] - 1) for c in ans}


def stratified_split(ds: Dataset, train_fraction: float, seed: int) -> SplitPair:
    """Split `ds` in two, preserving class proportions.

    Args:
        ds: Dataset to split. Must have at least 2 rows per present class.
        train_fraction: Fraction of rows to put in the training half, in ``(0, 1)``.
        seed: Seed for the per-class shuffle.

    Returns:
        A :class:`SplitPair`. Row order within each half follows the order in `ds`.

    Raises:
        SplitInfeasibleError: If some present class has fewer than 2 rows.
        DatasetError: If `train_fraction` is not in ``(0, 1)``.

    Examples:
        >>> ds = Dataset.from_arrays([[float(i)] for i in range(8)], [0, 0, 0, 0, 1, 1, 1, 1])
        >>> train, test = stratified_split(ds, 0.75, seed=2016)
        >>> train.class_counts(), test.class_counts()
        ({0: 3, 1: 3}, {0: 1, 1: 1})
    """
    if not 0 < train_fraction < 1:
        raise DatasetError(f"Train fraction must be in (0, 1), but got {train_fraction=}.")

    counts = {c: k for c, k in ds.class_counts().items() if k > 0}
    if any(k < 2 for k in counts.values()):
        raise SplitInfeasibleError(counts)

    rng = np.random.default_rng(seed)
    train_counts = allocate_train_counts(counts, train_fraction)
    train_parts = []
    for c in sorted(counts):
        members = np.flatnonzero(ds.labels == c)
        rng.shuffle(members)
        train_parts.append(members[: train_counts[c]])

    train_mask = np.zeros(ds.n_rows, dtype=bool)
    train_mask[np.concatenate(train_parts)] = True

    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(
            f"Split {ds} with {train_fraction=} and {seed=}: train={train_counts}, {counts=}.",
            extra=dict(train_counts=cast_unsafe(train_counts), class_counts=cast_unsafe(counts)),
        )

    return SplitPair(ds.take(np.flatnonzero(train_mask)), ds.take(np.flatnonzero(~train_mask)))
