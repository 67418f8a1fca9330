from time import perf_counter


def generate_task_id(start: float | None = None) -> int:
    """Generate a new task ID, used to correlate key event log records."""
    return round(1000 * (perf_counter() if start is None else start))
