"""Genetic programming over pipeline trees.

Use :func:`evolve_run` for guided (``Standard``) or ``Pareto`` search, and :func:`random_search_run` for the random
control. Both return a :class:`RunResult` holding the best pipeline ever evaluated.
"""

from ._config import GpConfig, SelectionMode
from ._engine import evolve_run, random_search_run
from ._individual import RUN_FORMAT, GenerationStats, Individual, RunResult, best_of
from ._pareto import ParetoFront, crowding_distance, dominates, fast_nondominated_sort, pareto_ranking, select_pareto
from ._selection import double_tournament, elites, select_standard
from ._variation import MUTATIONS, crossover, mutate

__all__ = [
    "MUTATIONS",
    "RUN_FORMAT",
    "GenerationStats",
    "GpConfig",
    "Individual",
    "ParetoFront",
    "RunResult",
    "SelectionMode",
    "best_of",
    "crossover",
    "crowding_distance",
    "dominates",
    "double_tournament",
    "elites",
    "evolve_run",
    "fast_nondominated_sort",
    "mutate",
    "pareto_ranking",
    "random_search_run",
    "select_pareto",
    "select_standard",
]
