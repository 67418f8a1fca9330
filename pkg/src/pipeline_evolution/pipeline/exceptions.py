"""Errors related to pipelines."""

import typing as _t

from ..exceptions import PipelineEvolutionError

if _t.TYPE_CHECKING:
    from ._validate import Violation


class PipelineError(PipelineEvolutionError):
    """Base class for pipeline exceptions."""


class PipelineParseError(PipelineError, ValueError):
    """A pipeline document could not be parsed.

    Args:
        message: Description of the problem.
        location: Where in the document the problem is, e.g. ``"$.root.children[0].op"`` or ``"line 3, column 7"``.
    """

    def __init__(self, message: str, location: str) -> None:
        super().__init__(f"{message} (at {location})")
        self.location = location


class InvalidPipelineError(PipelineError, ValueError):
    """A pipeline failed validation.

    Args:
        violations: Validation problems.
    """

    def __init__(self, violations: list["Violation"]) -> None:
        lines = "\n".join(f"  - {v}" for v in violations)
        super().__init__(f"Pipeline has {len(violations)} violation(s):\n{lines}")
        self.violations = violations
