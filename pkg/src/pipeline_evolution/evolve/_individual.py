import dataclasses
import typing as _t

from ..pipeline import FitnessRecord, Pipeline, from_document, to_document
from ._config import GpConfig, SelectionMode

RUN_FORMAT = "tpot-run/1"
"""Format tag of run documents."""


@dataclasses.dataclass(frozen=True)
class Individual:
    """A pipeline with its fitness, if evaluated."""

    pipeline: Pipeline
    fitness: FitnessRecord | None = None
    discovery: int = 0
    """Order of creation within the run. Used to break ties."""

    @property
    def evaluated(self) -> bool:
        """``True`` if `fitness` is set."""
        return self.fitness is not None

    @property
    def failed(self) -> bool:
        """``True`` if unevaluated or failed."""
        return self.fitness is None or self.fitness.failed

    @property
    def accuracy(self) -> float:
        """Balanced accuracy; zero if unevaluated or failed."""
        return 0.0 if self.fitness is None or self.fitness.failed else self.fitness.balanced_accuracy

    @property
    def rank_key(self) -> tuple[bool, float, int, int]:
        """Total order used for elites and best-ever: accuracy, then size, then discovery. Smaller is better."""
        return self.failed, -self.accuracy, self.pipeline.size, self.discovery

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return {
            "pipeline": to_document(self.pipeline),
            "fitness": None if self.fitness is None else self.fitness.to_dict(),
            "discovery": self.discovery,
        }

    @classmethod
    def from_dict(cls, d: _t.Mapping[str, _t.Any]) -> "Individual":
        """Create from :meth:`to_dict` output."""
        fitness = d.get("fitness")
        return cls(
            from_document(d["pipeline"]),
            None if fitness is None else FitnessRecord.from_dict(fitness),
            int(d.get("discovery", 0)),
        )


def best_of(individuals: _t.Iterable[Individual]) -> Individual | None:
    """The best individual by :attr:`Individual.rank_key`, or ``None`` if there are none."""
    return min(individuals, key=lambda i: i.rank_key, default=None)


@dataclasses.dataclass(frozen=True)
class GenerationStats:
    """Summary of one generation (or one batch, for random search)."""

    generation: int
    best_accuracy: float
    """Best accuracy in the population. For random search, the running best."""
    median_accuracy: float
    median_size: float
    evaluations: int
    """Evaluations performed in this generation."""
    elapsed_seconds: float
    """Time since the start of the run."""
    failures: int = 0
    """Failed evaluations in this generation."""

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class RunResult:
    """Outcome of :func:`.evolve_run` or :func:`.random_search_run`."""

    best: Individual | None
    """Best pipeline ever evaluated in the run; ``None`` if nothing was evaluated."""
    history: tuple[GenerationStats, ...]
    total_evaluations: int
    pareto_front: tuple[Individual, ...] = ()
    """Non-dominated individuals of the final population (``Pareto`` mode only)."""
    seed: int = 0
    mode: SelectionMode = SelectionMode.Standard
    config: GpConfig | None = None

    def to_document(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible run document."""
        return {
            "format": RUN_FORMAT,
            "mode": self.mode.value,
            "seed": self.seed,
            "total_evaluations": self.total_evaluations,
            "best": None if self.best is None else self.best.to_dict(),
            "history": [h.to_dict() for h in self.history],
            "pareto_front": [i.to_dict() for i in self.pareto_front],
            "config": None if self.config is None else self.config.to_dict(),
        }

    @classmethod
    def from_document(cls, doc: _t.Mapping[str, _t.Any]) -> "RunResult":
        """Inverse of :meth:`to_document`.

        Raises:
            ValueError: If `doc` is not a run document.
        """
        if doc.get("format") != RUN_FORMAT:
            raise ValueError(f"Expected format={RUN_FORMAT!r}, but got {doc.get('format')!r}.")
        best = doc.get("best")
        config = doc.get("config")
        return cls(
            best=None if best is None else Individual.from_dict(best),
            history=tuple(GenerationStats(**h) for h in doc.get("history", [])),
            total_evaluations=int(doc["total_evaluations"]),
            pareto_front=tuple(Individual.from_dict(i) for i in doc.get("pareto_front", [])),
            seed=int(doc.get("seed", 0)),
            mode=SelectionMode.parse(doc.get("mode", "standard")),
            config=None if config is None else GpConfig.from_dict(config),
        )
