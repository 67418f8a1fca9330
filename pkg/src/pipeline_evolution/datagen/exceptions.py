"""Errors related to data generation."""

from pathlib import Path

from ..exceptions import PipelineEvolutionError


class DataGenerationError(PipelineEvolutionError):
    """Base class for data generation exceptions."""


class GenerationFailedError(DataGenerationError):
    """The penetrance table search ran out of attempts.

    Args:
        message: Description of the request.
        best_residual: Smallest heritability shortfall seen during the search.
    """

    def __init__(self, message: str, best_residual: float) -> None:
        super().__init__(f"{message} Best residual: {best_residual:.4g}.")
        self.best_residual = best_residual


class UndefinedHeritabilityError(DataGenerationError, ValueError):
    """Heritability is undefined when prevalence is 0 or 1."""


class DataIOError(DataGenerationError, OSError):
    """Reading or writing generated data failed.

    Args:
        path: The offending path.
        reason: What went wrong.
    """

    def __init__(self, path: Path | str, reason: str) -> None:
        super().__init__(f"Cannot write '{path}': {reason}")
        self.path = Path(path)
