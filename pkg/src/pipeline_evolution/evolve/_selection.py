from collections.abc import Sequence

from deap import base, tools

from .. import types as _tt
from ..utils import seeded_random
from ._individual import Individual

FAILED_ACCURACY = -1.0
"""Selection fitness of failed or unevaluated individuals. Below every real accuracy."""


class AccuracyFitness(base.Fitness):  # type: ignore[misc]
    """Single-objective selection fitness: balanced accuracy, maximized."""

    weights = (1.0,)


class Contender:
    """Selection view of an :class:`.Individual`.

    The length of a contender is the operator count of its pipeline; :mod:`deap` size tournaments compare lengths.
    """

    __slots__ = ("fitness", "index", "size")

    def __init__(self, index: int, individual: Individual, fitness: base.Fitness) -> None:
        self.index = index
        self.size = individual.pipeline.size
        self.fitness = fitness

    def __len__(self) -> int:
        return self.size


def _accuracy_contenders(population: Sequence[Individual], order: Sequence[int] | None = None) -> list[Contender]:
    order = range(len(population)) if order is None else order
    contenders = []
    for i in order:
        ind = population[i]
        contenders.append(Contender(i, ind, AccuracyFitness((FAILED_ACCURACY if ind.failed else ind.accuracy,))))
    return contenders


def double_tournament(
    population: Sequence[Individual],
    rng: _tt.Rng,
    n: int,
    tournament_size: int = 3,
    parsimony_probability: float = 0.7,
) -> list[int]:
    """Fitness-first double tournament with parsimony pressure.

    Two candidates are drawn, each as the winner of a `tournament_size`-way accuracy tournament (ties go to the first
    drawn). If their sizes differ, the smaller one wins with probability `parsimony_probability`; otherwise the winner
    is drawn at random. See :func:`deap.tools.selDoubleTournament`.

    Args:
        population: Evaluated individuals.
        rng: Source of randomness.
        n: Number of winners to draw.
        tournament_size: Size of each fitness tournament.
        parsimony_probability: Probability that the smaller candidate wins, in ``[0.5, 1]``.

    Returns:
        Positions of the winners in `population`.

    Raises:
        ValueError: If `parsimony_probability` is out of range.
    """
    if not 0.5 <= parsimony_probability <= 1:
        raise ValueError(f"Bad {parsimony_probability=}; must be in [0.5, 1].")

    contenders = _accuracy_contenders(population)
    with seeded_random(rng):
        winners = tools.selDoubleTournament(
            contenders,
            n,
            fitness_size=tournament_size,
            parsimony_size=2 * parsimony_probability,
            fitness_first=True,
        )
    return [c.index for c in winners]


def elites(population: Sequence[Individual], count: int) -> list[int]:
    """Positions of the `count` best individuals by accuracy, then size, then discovery order."""
    order = sorted(range(len(population)), key=lambda i: population[i].rank_key)
    return [c.index for c in tools.selBest(_accuracy_contenders(population, order), count)]


def select_standard(
    population: Sequence[Individual],
    rng: _tt.Rng,
    elite_count: int | None = None,
    tournament_size: int = 3,
    parsimony_probability: float = 0.7,
) -> list[Individual]:
    """Elitism followed by double tournaments.

    The first `elite_count` entries of the output are the elites, copied unchanged. The remaining slots are filled by
    :func:`double_tournament`.

    Args:
        population: Evaluated individuals.
        rng: Source of randomness.
        elite_count: Number of elites. Default is ``max(1, round(0.1 * N))``.
        tournament_size: Size of each fitness tournament.
        parsimony_probability: Probability that the smaller candidate wins.

    Returns:
        A list of ``len(population)`` individuals.
    """
    n = len(population)
    if elite_count is None:
        elite_count = max(1, round(0.1 * n))
    elite_count = min(elite_count, n)

    chosen = elites(population, elite_count)
    chosen.extend(double_tournament(population, rng, n - elite_count, tournament_size, parsimony_probability))
    return [population[i] for i in chosen]
