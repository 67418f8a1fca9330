import logging

import numpy as np

from ._dataset import Dataset, make_unique
from .exceptions import IncompatibleCombineError, NoGuessError

LOGGER = logging.getLogger(__package__).getChild("combine")


def combine(a: Dataset, b: Dataset) -> Dataset:
    """Merge the features of two copies of the same instances.

    Features of `a` come first, followed by the features of `b` whose names are not already in `a`. The guess column of
    `a` is kept if present, else the guess of `b` is used.

    Args:
        a: Primary dataset.
        b: Secondary dataset.

    Returns:
        A combined ``Dataset``.

    Raises:
        IncompatibleCombineError: If the datasets differ in row count, labels or class count.

    Examples:
        >>> a = Dataset.from_arrays([[1.0, 2.0]], [0], ["f1", "f2"], class_count=2)
        >>> b = Dataset.from_arrays([[2.0, 3.0]], [0], ["f2", "f3"], class_count=2)
        >>> combine(a, b).feature_names
        ('f1', 'f2', 'f3')
    """
    if a.n_rows != b.n_rows:
        raise IncompatibleCombineError(f"Cannot combine datasets with {a.n_rows} and {b.n_rows} rows.")
    if a.class_count != b.class_count:
        raise IncompatibleCombineError(f"Cannot combine datasets with {a.class_count} and {b.class_count} classes.")
    if not np.array_equal(a.labels, b.labels):
        raise IncompatibleCombineError("Cannot combine datasets with different labels.")

    known = set(a.feature_names)
    new = [i for i, name in enumerate(b.feature_names) if name not in known]

    rows = np.hstack([a.rows, b.rows[:, new]]) if new else a.rows
    names = a.feature_names + tuple(b.feature_names[i] for i in new)
    guess = a.guess if a.guess is not None else b.guess
    return Dataset(names, rows, a.labels, a.class_count, guess=guess, class_names=a.class_names)


def push_guess_to_feature(ds: Dataset, tag: str) -> Dataset:
    """Demote the guess column to an ordinary feature.

    Args:
        ds: A dataset with a guess column.
        tag: Preferred name of the new feature. A ``_<i>`` suffix is added on collision.

    Returns:
        A copy of `ds` with one more feature and no guess.

    Raises:
        NoGuessError: If `ds` has no guess.

    Examples:
        >>> ds = Dataset.from_arrays([[0.0], [1.0], [2.0]], [0, 1, 1]).with_guess([0, 1, 1])
        >>> pushed = push_guess_to_feature(ds, "guess_0")
        >>> pushed.feature_names, pushed.guess
        (('x0', 'guess_0'), None)
        >>> push_guess_to_feature(pushed.with_guess([1, 1, 1]), "guess_0").feature_names
        ('x0', 'guess_0', 'guess_0_1')
    """
    if ds.guess is None:
        raise NoGuessError(f"Cannot push guess of {ds}: there is no guess column.")

    name = make_unique([tag], taken=ds.feature_names)[0]
    rows = np.hstack([ds.rows, ds.guess.astype(np.float64)[:, None]])

    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(f"Pushed guess of {ds} to feature {name!r}.")

    return Dataset(ds.feature_names + (name,), rows, ds.labels, ds.class_count, class_names=ds.class_names)
