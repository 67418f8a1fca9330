import dataclasses
import hashlib
import typing as _t
from collections import Counter
from collections.abc import Iterable, Sequence

import numpy as np

from .. import types as _tt
from .exceptions import DatasetError


def make_unique(names: Iterable[str], taken: Iterable[str] = ()) -> list[str]:
    """Make `names` pairwise distinct by adding ``_<i>`` suffixes.

    Args:
        names: Names to de-duplicate. The first occurrence of a name is kept as-is.
        taken: Names which may not be used at all.

    Returns:
        A list of unique names, in the same order as `names`.

    Examples:
        >>> make_unique(["x", "x", "y", "x_1"])
        ['x', 'x_1', 'y', 'x_1_1']
        >>> make_unique(["guess_0"], taken=["guess_0"])
        ['guess_0_1']
    """
    used = set(taken)
    ans = []
    for name in names:
        candidate = name
        i = 0
        while candidate in used:
            i += 1
            candidate = f"{name}_{i}"
        used.add(candidate)
        ans.append(candidate)
    return ans


def _readonly(arr: np.ndarray) -> np.ndarray:
    if arr.flags.writeable:
        arr = arr.copy()
        arr.flags.writeable = False
    return arr


@dataclasses.dataclass(frozen=True, eq=False)
class Dataset:
    """Labeled numeric dataset with an optional guess column.

    Instances are immutable; array fields are read-only. Use :meth:`equals` for value comparison.

    Examples:
        >>> ds = Dataset.from_arrays([[0.0, 1.0], [1.0, 0.0]], [0, 1])
        >>> ds
        Dataset(n=2, m=2, classes=2)
        >>> ds.feature_names
        ('x0', 'x1')
    """

    feature_names: tuple[str, ...]
    """Unique feature names, one per column of `rows`."""
    rows: _tt.Matrix
    """An ``(n, m)`` feature matrix."""
    labels: _tt.LabelVector
    """Class identifiers in ``0..class_count-1``."""
    class_count: int
    """Number of classes `C`. Must be at least 2."""
    guess: _tt.LabelVector | None = None
    """Current predictions, written by the most recent classifier."""
    class_names: tuple[str, ...] | None = None
    """Original label values, if the labels were mapped from strings. Not part of :meth:`equals`."""

    def __post_init__(self) -> None:
        rows = np.asarray(self.rows, dtype=np.float64)
        labels = np.asarray(self.labels, dtype=np.int64)
        if rows.ndim != 2:
            raise DatasetError(f"Rows must be a 2-dimensional matrix, but got {rows.ndim=}.")
        n, m = rows.shape
        if len(self.feature_names) != m:
            raise DatasetError(f"Got {len(self.feature_names)} feature names for {m} columns.")
        if len(set(self.feature_names)) != m:
            raise DatasetError(f"Feature names must be unique: {self.feature_names}.")
        if labels.shape != (n,):
            raise DatasetError(f"Expected {n} labels, but got shape {labels.shape}.")
        if self.class_count < 2:
            raise DatasetError(f"At least 2 classes are required, but got {self.class_count=}.")
        _check_range("labels", labels, self.class_count)

        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        object.__setattr__(self, "rows", _readonly(rows))
        object.__setattr__(self, "labels", _readonly(labels))

        if self.guess is not None:
            guess = np.asarray(self.guess, dtype=np.int64)
            if guess.shape != (n,):
                raise DatasetError(f"Expected {n} guess values, but got shape {guess.shape}.")
            _check_range("guess", guess, self.class_count)
            object.__setattr__(self, "guess", _readonly(guess))

        if self.class_names is not None:
            if len(self.class_names) != self.class_count:
                raise DatasetError(f"Got {len(self.class_names)} class names for {self.class_count} classes.")
            object.__setattr__(self, "class_names", tuple(self.class_names))

    @classmethod
    def from_arrays(
        cls,
        rows: _t.Any,
        labels: _t.Any,
        feature_names: Sequence[str] | None = None,
        *,
        class_count: int | None = None,
    ) -> "Dataset":
        """Create a dataset from array-likes.

        Args:
            rows: An ``(n, m)`` array-like.
            labels: Integer labels.
            feature_names: Column names. Default is ``x0, x1, ...``.
            class_count: Number of classes. Derived from `labels` if ``None``.

        Returns:
            A new ``Dataset``.
        """
        rows = np.asarray(rows, dtype=np.float64)
        labels = np.asarray(labels, dtype=np.int64)
        if feature_names is None:
            feature_names = [f"x{i}" for i in range(rows.shape[1] if rows.ndim == 2 else 0)]
        if class_count is None:
            class_count = max(2, int(labels.max()) + 1) if labels.size else 2
        return cls(tuple(feature_names), rows, labels, class_count)

    @property
    def n_rows(self) -> int:
        """Number of instances `n`."""
        return int(self.rows.shape[0])

    @property
    def n_features(self) -> int:
        """Number of features `m`."""
        return int(self.rows.shape[1])

    def class_counts(self) -> dict[int, int]:
        """Instance count per class identifier, including empty classes."""
        counts = np.bincount(self.labels, minlength=self.class_count)
        return {c: int(k) for c, k in enumerate(counts)}

    def take(self, indices: _t.Any) -> "Dataset":
        """Select rows by position."""
        idx = np.asarray(indices, dtype=np.intp)
        return dataclasses.replace(
            self,
            rows=self.rows[idx],
            labels=self.labels[idx],
            guess=None if self.guess is None else self.guess[idx],
        )

    def with_features(self, rows: _t.Any, feature_names: Sequence[str]) -> "Dataset":
        """Replace the feature matrix, keeping labels and guess."""
        return dataclasses.replace(self, rows=np.asarray(rows, dtype=np.float64), feature_names=tuple(feature_names))

    def with_guess(self, guess: _t.Any | None) -> "Dataset":
        """Replace (or clear) the guess column."""
        return dataclasses.replace(self, guess=guess)

    def row_digests(self) -> Counter[str]:
        """Count of SHA-256 digests of the raw bytes of each row (features followed by label)."""
        ans: Counter[str] = Counter()
        for row, label in zip(self.rows, self.labels, strict=True):
            h = hashlib.sha256(np.ascontiguousarray(row).tobytes())
            h.update(int(label).to_bytes(8, "little", signed=True))
            ans[h.hexdigest()] += 1
        return ans

    def equals(self, other: "Dataset") -> bool:
        """Value equality on names, rows, labels, guess and class count."""
        if not isinstance(other, Dataset):
            return False
        if self.guess is None or other.guess is None:
            guess_equal = self.guess is None and other.guess is None
        else:
            guess_equal = bool(np.array_equal(self.guess, other.guess))
        return (
            self.feature_names == other.feature_names
            and self.class_count == other.class_count
            and self.rows.shape == other.rows.shape
            and bool(np.array_equal(self.rows, other.rows))
            and bool(np.array_equal(self.labels, other.labels))
            and guess_equal
        )

    def __repr__(self) -> str:
        guess = ", guess=True" if self.guess is not None else ""
        return f"Dataset(n={self.n_rows}, m={self.n_features}, classes={self.class_count}{guess})"


def _check_range(what: str, values: np.ndarray, class_count: int) -> None:
    if values.size and (values.min() < 0 or values.max() >= class_count):
        bad = sorted({int(v) for v in values if not 0 <= v < class_count})
        raise DatasetError(f"All {what} must be in 0..{class_count - 1}, but got {bad}.")
