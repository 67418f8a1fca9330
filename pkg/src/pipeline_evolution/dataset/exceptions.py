"""Errors related to datasets."""

from ..exceptions import PipelineEvolutionError


class DatasetError(PipelineEvolutionError, ValueError):
    """Base class for dataset exceptions."""


class SplitInfeasibleError(DatasetError):
    """A dataset cannot be split while keeping every class on both sides.

    Args:
        counts: Instance count per class identifier.
    """

    def __init__(self, counts: dict[int, int]) -> None:
        too_small = {c: n for c, n in counts.items() if n < 2}
        super().__init__(
            f"Cannot perform a stratified split: classes {too_small} have fewer than 2 instances."
            "\nHint: Every class must have at least 2 rows."
        )
        self.counts = counts


class IncompatibleCombineError(DatasetError):
    """Two datasets do not describe the same instances."""


class NoGuessError(DatasetError):
    """An operation required a guess column, but the dataset has none."""


class LengthMismatchError(DatasetError):
    """Label vectors of unequal (or zero) length."""


class ShapeError(DatasetError):
    """A dataset has the wrong number of features for a fitted artifact.

    Args:
        expected: Width the artifact was fitted on.
        actual: Width of the offending dataset.
        what: Description of the artifact.
    """

    def __init__(self, expected: int, actual: int, what: str = "artifact") -> None:
        super().__init__(f"The {what} was fitted on {expected} features, but got {actual}.")
        self.expected = expected
        self.actual = actual
