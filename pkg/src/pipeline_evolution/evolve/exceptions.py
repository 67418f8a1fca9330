"""Errors related to evolution runs."""

from ..exceptions import PipelineEvolutionError


class EvolutionError(PipelineEvolutionError):
    """Base class for evolution exceptions."""


class SetupError(EvolutionError, ValueError):
    """The run cannot start, e.g. because the data cannot be split. Raised before any evaluation."""
