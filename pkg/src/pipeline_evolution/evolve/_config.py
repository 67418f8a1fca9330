import dataclasses
import typing as _t
from enum import Enum

from ..exceptions import ConfigurationError


class SelectionMode(Enum):
    """Search strategies.

    Examples:
        >>> SelectionMode.parse("random-search")
        <SelectionMode.RandomSearch: 'random'>
    """

    _ignore_ = ["ParseType"]  # noqa:  RUF012

    ParseType = _t.Union[str, "SelectionMode"]  # Type checking
    """Types that may be interpreted as a ``SelectionMode``."""

    Standard = "standard"
    """Elitism followed by a fitness-then-size double tournament."""
    Pareto = "pareto"
    """Copies of the best individuals under non-dominated sorting on (accuracy, size)."""
    RandomSearch = "random"
    """Independent random pipelines; no selection."""

    @classmethod
    def parse(cls, arg: ParseType) -> "SelectionMode":
        """Convert to ``SelectionMode``. Accepts values and names, ignoring case, dashes and underscores.

        Raises:
            ValueError: If the argument could not be converted.
        """
        if isinstance(arg, SelectionMode):
            return arg
        key = str(arg).strip().lower().replace("-", "").replace("_", "")
        for mode in SelectionMode:
            if key in {mode.value, mode.name.lower()} or (mode is SelectionMode.Standard and key == "guided"):
                return mode
        options = [m.value for m in SelectionMode]
        raise ValueError(f"Could not convert {arg=} to SelectionMode. Correct input: {options} or 'guided'.")


SelectionMode.ParseType = _t.Union[str, SelectionMode]


@dataclasses.dataclass(frozen=True)
class GpConfig:
    """Settings of a search run.

    Raises:
        ConfigurationError: If any setting is out of range.

    Examples:
        >>> GpConfig(population_size=50, generations=30).mutation_rate
        0.9
    """

    population_size: int = 100
    """Number of individuals."""
    generations: int = 100
    """Number of generations after the initial population."""
    mutation_rate: float = 0.90
    """Per-individual probability of mutation."""
    crossover_rate: float = 0.05
    """Per-individual probability of crossover. The remaining share is reproduction (copy)."""
    selection_mode: SelectionMode = SelectionMode.Standard
    elitism_fraction: float = 0.10
    """Share of the population copied unchanged in ``Standard`` mode."""
    seed: int = 0
    """Run seed. All randomness of the run is derived from it."""
    init_depth: int = 3
    """Depth cap of initial random pipelines."""
    max_depth: int = 10
    """Depth cap of every pipeline."""
    max_operators: int = 20
    """Operator count cap of every pipeline."""
    eval_budget_millis: int = 20_000
    """Wall-time budget of each evaluation. Zero or negative disables the budget."""
    tournament_size: int = 3
    """Size of each fitness tournament."""
    parsimony_probability: float = 0.7
    """Probability that the smaller of two tournament winners of different size is selected, in ``[0.5, 1]``."""
    pareto_fraction: float = 0.2
    """Share of the population kept as parents in ``Pareto`` mode."""
    pareto_copies: int = 5
    """Nominal number of copies of each parent in ``Pareto`` mode. Copies are cycled until the population is full."""
    random_search_depth: int = 5
    """Depth cap of pipelines generated in ``RandomSearch`` mode."""
    reshuffle_split: bool = False
    """If ``True``, draw a new internal split every generation and re-evaluate the whole population."""
    internal_train_fraction: float = 0.75
    """Training share of the internal evaluation split."""
    max_workers: int = 1
    """Number of threads used to evaluate a generation."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "selection_mode", SelectionMode.parse(self.selection_mode))
        problems = list(self._problems())
        if problems:
            raise ConfigurationError(f"Bad {type(self).__name__}: " + "; ".join(problems))

    def _problems(self) -> _t.Iterator[str]:
        if self.population_size < 1:
            yield f"{self.population_size=} < 1"
        if self.generations < 0:
            yield f"{self.generations=} < 0"
        if not 0 <= self.mutation_rate <= 1 or not 0 <= self.crossover_rate <= 1:
            yield f"rates must be in [0, 1]; got {self.mutation_rate=}, {self.crossover_rate=}"
        if self.mutation_rate + self.crossover_rate > 1 + 1e-12:
            yield f"mutation_rate + crossover_rate = {self.mutation_rate + self.crossover_rate} > 1"
        if not 0 < self.elitism_fraction < 1:
            yield f"{self.elitism_fraction=} not in (0, 1)"
        if self.init_depth < 1 or self.max_depth < self.init_depth:
            yield f"need 1 <= init_depth <= max_depth; got {self.init_depth=}, {self.max_depth=}"
        if self.random_search_depth < 1:
            yield f"{self.random_search_depth=} < 1"
        if self.max_operators < 1:
            yield f"{self.max_operators=} < 1"
        if self.tournament_size < 1:
            yield f"{self.tournament_size=} < 1"
        if not 0.5 <= self.parsimony_probability <= 1:
            yield f"{self.parsimony_probability=} not in [0.5, 1]"
        if not 0 < self.pareto_fraction <= 1:
            yield f"{self.pareto_fraction=} not in (0, 1]"
        if self.pareto_copies < 1:
            yield f"{self.pareto_copies=} < 1"
        if not 0 < self.internal_train_fraction < 1:
            yield f"{self.internal_train_fraction=} not in (0, 1)"
        if self.max_workers < 1:
            yield f"{self.max_workers=} < 1"
        if self.seed < 0:
            yield f"{self.seed=} < 0"

    @property
    def elite_count(self) -> int:
        """Number of elites in ``Standard`` mode: ``max(1, round(elitism_fraction * population_size))``."""
        return min(self.population_size, max(1, round(self.elitism_fraction * self.population_size)))

    def replace(self, **changes: _t.Any) -> "GpConfig":
        """Copy with `changes` applied."""
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        ans = dataclasses.asdict(self)
        ans["selection_mode"] = self.selection_mode.value
        return ans

    @classmethod
    def from_dict(cls, d: _t.Mapping[str, _t.Any]) -> "GpConfig":
        """Create from a dict. Unknown keys raise ``ConfigurationError``."""
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d).difference(known)
        if unknown:
            raise ConfigurationError(f"Unknown GpConfig keys: {sorted(unknown)}. Known keys: {sorted(known)}.")
        try:
            return cls(**d)
        except ValueError as e:
            raise ConfigurationError(str(e)) from e
