"""General errors for the pipeline evolution suite."""


class ConfigurationError(TypeError):
    """Raised in case of bad configuration."""


class PipelineEvolutionError(Exception):
    """Base class for domain errors raised by this package."""


class BudgetExceededError(RuntimeError):
    """Raised when a cooperative :class:`~pipeline_evolution.utils.Deadline` expires.

    Args:
        budget_millis: The budget that was exceeded.
        where: Description of the operation that noticed the expiry.
    """

    def __init__(self, budget_millis: int, where: str = "") -> None:
        extra = f" during {where}" if where else ""
        super().__init__(f"Evaluation budget of {budget_millis} ms exceeded{extra}.")
        self.budget_millis = budget_millis
        self.where = where
