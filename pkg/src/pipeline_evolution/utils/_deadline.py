from time import perf_counter

from ..exceptions import BudgetExceededError


class Deadline:
    """Cooperative wall-time budget.

    Long-running loops call :meth:`check` between units of work (trees, boosting stages, gradient steps, pipeline
    nodes). Nothing is interrupted preemptively.

    Args:
        budget_millis: Budget in milliseconds. Zero or negative disables the deadline.

    Examples:
        >>> Deadline(0).check("never raises")
        >>> Deadline(10_000).remaining_millis > 0
        True
    """

    def __init__(self, budget_millis: int) -> None:
        self._budget = int(budget_millis)
        self._start = perf_counter()

    @property
    def budget_millis(self) -> int:
        """Total budget."""
        return self._budget

    @property
    def elapsed_millis(self) -> int:
        """Time spent since creation."""
        return int(1000 * (perf_counter() - self._start))

    @property
    def remaining_millis(self) -> float:
        """Remaining budget; infinite when disabled."""
        if self._budget <= 0:
            return float("inf")
        return self._budget - 1000 * (perf_counter() - self._start)

    @property
    def expired(self) -> bool:
        """Expiry status."""
        return self.remaining_millis <= 0

    def check(self, where: str = "") -> None:
        """Raise if the deadline has expired.

        Args:
            where: Description of the operation, used in the error message.

        Raises:
            BudgetExceededError: If the budget has been spent.
        """
        if self.expired:
            raise BudgetExceededError(self._budget, where)

    def __repr__(self) -> str:
        return f"Deadline(budget_millis={self._budget})"


NO_DEADLINE = Deadline(0)
"""A deadline that never expires."""
