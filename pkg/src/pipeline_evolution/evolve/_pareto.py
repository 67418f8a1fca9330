import math
import random
import typing as _t
from collections.abc import Sequence

from deap import base, tools
from deap.tools.emo import assignCrowdingDist

from .. import types as _tt
from ..utils import seeded_random
from ._individual import Individual

Point = tuple[float, float]
"""An ``(accuracy, size)`` pair. Accuracy is maximized, size minimized."""


class ParetoFitness(base.Fitness):  # type: ignore[misc]
    """Two-objective fitness: accuracy is maximized, operator count minimized."""

    weights = (1.0, -1.0)


class ParetoFront(_t.NamedTuple):
    """One front of a non-dominated sort."""

    indices: tuple[int, ...]
    """Positions of the members in the sorted points, ascending."""
    crowding: tuple[float, ...]
    """Crowding distance of each member. Boundary members have infinite distance."""


class _Ranked:
    __slots__ = ("fitness", "index")

    def __init__(self, index: int, point: Point) -> None:
        self.index = index
        self.fitness = ParetoFitness(point)


def dominates(a: Point, b: Point) -> bool:
    """``True`` if `a` is at least as good as `b` in both objectives, and strictly better in one.

    Examples:
        >>> dominates((0.9, 2), (0.7, 5)), dominates((0.9, 2), (0.8, 1))
        (True, False)
    """
    return bool(ParetoFitness(a).dominates(ParetoFitness(b)))


def _crowding(members: list[_Ranked]) -> list[float]:
    assignCrowdingDist(members)
    return [m.fitness.crowding_dist for m in members]


def crowding_distance(points: Sequence[Point], front: Sequence[int]) -> list[float]:
    """Crowding distance of each member of `front`.

    For each objective, members are sorted by value; the extremes get infinite distance and interior members add the
    gap between their neighbors, normalized by the range of the objective and the number of objectives. Objectives
    with zero range within the front contribute nothing. See :func:`deap.tools.emo.assignCrowdingDist`.

    Examples:
        >>> crowding_distance([(0.9, 2), (0.8, 1), (0.85, 1.5)], [0, 1, 2])
        [inf, inf, 1.0]
    """
    return _crowding([_Ranked(i, points[i]) for i in front])


def _sort(ranked: list[_Ranked]) -> list[list[_Ranked]]:
    fronts = tools.sortNondominated(ranked, len(ranked))
    return [sorted(front, key=lambda r: r.index) for front in fronts]


def fast_nondominated_sort(points: Sequence[Point]) -> list[ParetoFront]:
    """Sort points into non-dominated fronts.

    Front 0 is the set of points not dominated by any other point; each following front is non-dominated once the
    previous fronts are removed. See :func:`deap.tools.sortNondominated`.

    Args:
        points: A sequence of ``(accuracy, size)`` pairs.

    Returns:
        Fronts, best first, with crowding distances.

    Examples:
        >>> [front.indices for front in fast_nondominated_sort([(0.9, 2), (0.8, 1), (0.7, 5)])]
        [(0, 1), (2,)]
    """
    if not points:
        return []

    fronts = _sort([_Ranked(i, p) for i, p in enumerate(points)])
    return [ParetoFront(tuple(r.index for r in front), tuple(_crowding(front))) for front in fronts]


def _succeeded(population: Sequence[Individual]) -> list[_Ranked]:
    return [
        _Ranked(i, (ind.accuracy, float(ind.pipeline.size))) for i, ind in enumerate(population) if not ind.failed
    ]


def pareto_ranking(population: Sequence[Individual]) -> list[int]:
    """Order the population by front, then by descending crowding distance.

    Failed or unevaluated individuals are placed after every front, in population order.
    """
    succeeded = _succeeded(population)
    ranking = []
    # Same front order as tools.selNSGA2, so a prefix of the ranking is what it selects.
    for front in tools.sortNondominated(succeeded, len(succeeded)):
        _crowding(front)
        ranking.extend(r.index for r in sorted(front, key=lambda r: r.fitness.crowding_dist, reverse=True))
    ranking.extend(i for i, ind in enumerate(population) if ind.failed)
    return ranking


def select_pareto(
    population: Sequence[Individual],
    rng: _tt.Rng,
    fraction: float = 0.2,
    copies: int = 5,
) -> list[Individual]:
    """Refill the population with copies of its best ``ceil(fraction * N)`` individuals under non-dominated sorting.

    Parents are chosen by :func:`deap.tools.selNSGA2` among the successful individuals, then padded with failed ones
    if there are too few. Parents are cycled until `N` slots are filled, so each appears `copies` times when
    ``N = copies * parents``. The output order is shuffled.

    Args:
        population: Evaluated individuals.
        rng: Source of randomness.
        fraction: Share of the population kept as parents.
        copies: Nominal number of copies per parent. Only used to validate the arguments.

    Returns:
        A list of ``len(population)`` individuals.
    """
    if copies < 1:
        raise ValueError(f"Bad {copies=}.")
    n = len(population)
    n_parents = max(1, min(n, math.ceil(fraction * n)))

    succeeded = _succeeded(population)
    parents = [r.index for r in tools.selNSGA2(succeeded, min(n_parents, len(succeeded)))] if succeeded else []
    parents.extend(i for i, ind in enumerate(population) if ind.failed)

    selected = [population[parents[i % n_parents]] for i in range(n)]
    with seeded_random(rng):
        random.shuffle(selected)
    return selected
