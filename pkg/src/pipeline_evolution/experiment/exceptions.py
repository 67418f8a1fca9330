"""Errors related to data ingestion and the benchmark harness."""

from pathlib import Path

from ..exceptions import PipelineEvolutionError


class ExperimentError(PipelineEvolutionError):
    """Base class for experiment exceptions."""


class CsvParseError(ExperimentError, ValueError):
    """A CSV file could not be parsed.

    Args:
        path: The offending file.
        message: What went wrong.
        row: One-based line number in the file, if known.
        column: Column name, if known.
    """

    def __init__(self, path: Path | str, message: str, row: int | None = None, column: str | None = None) -> None:
        location = "" if row is None else f" at line {row}" + ("" if column is None else f", column {column!r}")
        super().__init__(f"Cannot parse '{path}'{location}: {message}")
        self.path = Path(path)
        self.row = row
        self.column = column


class SchemaError(ExperimentError, ValueError):
    """The data does not have the expected columns or classes."""


class HoldoutLeakError(ExperimentError, AssertionError):
    """Outer holdout rows were found in data passed to a search arm."""


class ExportError(ExperimentError, OSError):
    """A run could not be exported."""
