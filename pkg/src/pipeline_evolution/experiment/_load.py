import logging
from pathlib import Path

import numpy as np
import pandas as pd

from .._compat import PathLikeType
from ..datagen import LABEL_COLUMN
from ..dataset import Dataset
from .exceptions import CsvParseError, SchemaError

LOGGER = logging.getLogger(__package__).getChild("load")


def encode_labels(labels: pd.Series) -> tuple[np.ndarray, tuple[str, ...] | None]:
    """Map labels to dense codes ``0..C-1``.

    Integer labels that already form ``0..C-1`` keep their values. Other labels get codes in order of first
    appearance, and the original values are returned as class names.

    Examples:
        >>> encode_labels(pd.Series(["b", "m", "b"]))
        (array([0, 1, 0]), ('b', 'm'))
        >>> encode_labels(pd.Series([1, 0, 1]))
        (array([1, 0, 1]), None)
    """
    if pd.api.types.is_integer_dtype(labels):
        values = labels.to_numpy(dtype=np.int64)
        if set(np.unique(values).tolist()) == set(range(int(values.max()) + 1 if values.size else 0)):
            return values, None

    codes, uniques = pd.factorize(labels, sort=False)
    return codes.astype(np.int64), tuple(map(str, uniques))


def load_csv(path: PathLikeType, label_column: str = LABEL_COLUMN) -> Dataset:
    """Read a labeled dataset from a comma-separated file with a header row.

    Blank lines are ignored. All columns except `label_column` must be numeric.

    Args:
        path: A CSV file.
        label_column: Name of the label column.

    Returns:
        A :class:`.Dataset`. String labels are kept as :attr:`.Dataset.class_names`.

    Raises:
        CsvParseError: If the file cannot be read, or a feature cell is not a number.
        SchemaError: If `label_column` is missing, or there are fewer than two classes.
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, skip_blank_lines=True)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise CsvParseError(path, str(e)) from e

    if label_column not in frame.columns:
        raise SchemaError(f"Label column {label_column!r} not found in '{path}'. Columns: {list(frame.columns)}.")

    labels = frame.pop(label_column)
    if labels.isna().any():
        row = int(np.flatnonzero(labels.isna().to_numpy())[0])
        raise CsvParseError(path, "missing label", row=row + 2, column=label_column)

    for name in frame.columns:
        column = frame[name]
        numeric = pd.to_numeric(column, errors="coerce")
        bad = numeric.isna().to_numpy()
        if bad.any():
            row = int(np.flatnonzero(bad)[0])
            raise CsvParseError(path, f"{column.iloc[row]!r} is not a number", row=row + 2, column=str(name))
        frame[name] = numeric

    codes, class_names = encode_labels(labels)
    class_count = int(codes.max()) + 1 if codes.size else 0
    if class_count < 2:
        raise SchemaError(f"Need at least two classes in column {label_column!r} of '{path}', got {class_count}.")

    ds = Dataset(
        tuple(map(str, frame.columns)),
        frame.to_numpy(dtype=np.float64),
        codes,
        class_count,
        class_names=class_names,
    )
    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(f"Loaded {ds} from '{path}' with {class_names=}.")
    return ds
