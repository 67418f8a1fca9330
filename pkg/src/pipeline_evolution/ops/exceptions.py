"""Errors related to operators."""

from ..dataset.exceptions import ShapeError
from ..exceptions import PipelineEvolutionError


class OperatorError(PipelineEvolutionError):
    """Base class for operator exceptions."""


class ParameterError(OperatorError, ValueError):
    """Parameters do not validate against the schema of an operator.

    Args:
        kind: Name of the operator.
        problems: Schema problems, as returned by :func:`.validate_params`.
    """

    def __init__(self, kind: str, problems: list[str]) -> None:
        super().__init__(f"Bad parameters for {kind}: " + "; ".join(problems))
        self.kind = kind
        self.problems = problems


class DegenerateOutputError(OperatorError):
    """A transform produced a dataset without features."""


class TrainingError(OperatorError):
    """A model could not be trained on the given data."""


__all__ = [
    "DegenerateOutputError",
    "OperatorError",
    "ParameterError",
    "ShapeError",
    "TrainingError",
]
