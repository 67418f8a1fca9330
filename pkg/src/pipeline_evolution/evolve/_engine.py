import logging
import statistics
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from time import perf_counter

import numpy as np

from .._compat import fmt_perf
from ..dataset import Dataset, SplitPair, stratified_split
from ..dataset.exceptions import DatasetError
from ..pipeline import FitnessRecord, Pipeline, evaluate_pipeline, random_pipeline
from ..settings import logging as settings
from ..utils import derive_seed, generate_task_id
from ._config import GpConfig, SelectionMode
from ._individual import GenerationStats, Individual, RunResult, best_of
from ._pareto import fast_nondominated_sort, select_pareto
from ._selection import select_standard
from ._variation import crossover, mutate
from .exceptions import SetupError

LOGGER = logging.getLogger(__package__).getChild("Evolver")

# Keys passed to derive_seed(cfg.seed, <stream>, ...)
_SPLIT_STREAM = 0
_SEARCH_STREAM = 1
_EVALUATION_STREAM = 2


def _setup(cfg: GpConfig, data: Dataset, generation: int = 0) -> SplitPair:
    if data.n_features == 0:
        raise SetupError(f"Cannot search on {data}: there are no features.")
    try:
        return stratified_split(data, cfg.internal_train_fraction, derive_seed(cfg.seed, _SPLIT_STREAM, generation))
    except DatasetError as e:
        raise SetupError(f"Cannot search on {data}: {e}") from e


class _Evaluator:
    def __init__(self, cfg: GpConfig, data: Dataset, task_id: int) -> None:
        self.cfg = cfg
        self.data = data
        self.task_id = task_id
        self.count = 0

    def __call__(self, pipelines: Sequence[Pipeline], split: SplitPair, generation: int) -> list[FitnessRecord]:
        cfg = self.cfg
        seeds = [derive_seed(cfg.seed, _EVALUATION_STREAM, generation, i) for i in range(len(pipelines))]

        def evaluate(i: int) -> FitnessRecord:
            return evaluate_pipeline(
                pipelines[i],
                self.data,
                seeds[i],
                cfg.eval_budget_millis,
                split=split,
                task_id=self.task_id,
            )

        if cfg.max_workers > 1 and len(pipelines) > 1:
            with ThreadPoolExecutor(max_workers=cfg.max_workers, thread_name_prefix="evaluate") as executor:
                records = list(executor.map(evaluate, range(len(pipelines))))
        else:
            records = [evaluate(i) for i in range(len(pipelines))]

        self.count += len(records)
        return records


def _stats(generation: int, evaluated: Sequence[Individual], evaluations: int, start: float) -> GenerationStats:
    accuracies = [ind.accuracy for ind in evaluated]
    return GenerationStats(
        generation=generation,
        best_accuracy=max(accuracies, default=0.0),
        median_accuracy=float(statistics.median(accuracies)) if accuracies else 0.0,
        median_size=float(statistics.median(ind.pipeline.size for ind in evaluated)) if evaluated else 0.0,
        evaluations=evaluations,
        elapsed_seconds=round(perf_counter() - start, 3),
        failures=sum(ind.failed for ind in evaluated),
    )


def _vary(
    selected: list[Individual],
    protected: int,
    cfg: GpConfig,
    rng: np.random.Generator,
    next_discovery: Callable[[], int],
) -> list[Individual]:
    offspring = selected[:protected]
    for ind in selected[protected:]:
        u = rng.random()
        if u < cfg.mutation_rate:
            child = mutate(ind.pipeline, rng, cfg.max_depth, cfg.max_operators)
        elif u < cfg.mutation_rate + cfg.crossover_rate:
            partner = selected[int(rng.integers(len(selected)))]
            child = crossover(ind.pipeline, partner.pipeline, rng, cfg.max_depth, cfg.max_operators)
        else:
            offspring.append(ind)
            continue

        if child == ind.pipeline:
            offspring.append(ind)
        else:
            offspring.append(Individual(child, None, next_discovery()))
    return offspring


def _log_generation(task_id: int, generation: int, stats: GenerationStats, best: Individual | None) -> None:
    log_level = settings.GENERATION
    event_key = "EVOLVER.GENERATION"
    if LOGGER.isEnabledFor(log_level.exit):
        LOGGER.log(
            log_level.exit,
            f"Generation {generation}: best={stats.best_accuracy:.4f}, median={stats.median_accuracy:.4f},"
            f" median_size={stats.median_size}, evaluations={stats.evaluations}, failures={stats.failures}."
            f" Best-ever: {best.pipeline if best else None}.",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="EXIT",
                event_title=f"{event_key}.EXIT",
                generation=generation,
                best_accuracy=stats.best_accuracy,
                median_accuracy=stats.median_accuracy,
                median_size=stats.median_size,
                evaluations=stats.evaluations,
                failures=stats.failures,
            ),
        )


def _log_enter(log_level: int, event_key: str, task_id: int, message: str, cfg: GpConfig) -> None:
    if LOGGER.isEnabledFor(log_level):
        LOGGER.log(
            log_level,
            message,
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="ENTER",
                event_title=f"{event_key}.ENTER",
                config=cfg.to_dict(),
            ),
        )


def _log_exit(log_level: int, event_key: str, task_id: int, start: float, verb: str, result: RunResult) -> None:
    if LOGGER.isEnabledFor(log_level):
        best = result.best
        best_info = (
            "No pipeline was evaluated."
            if best is None or best.fitness is None
            else f"Best pipeline (balanced_accuracy={best.fitness.balanced_accuracy:.4f},"
            f" size={best.pipeline.size}): {best.pipeline}."
        )
        LOGGER.log(
            log_level,
            f"Finished {verb} in {fmt_perf(start)} after {result.total_evaluations} evaluations. {best_info}",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="EXIT",
                event_title=f"{event_key}.EXIT",
                execution_time=perf_counter() - start,
                total_evaluations=result.total_evaluations,
                best_accuracy=None if best is None else best.accuracy,
                best_size=None if best is None else best.pipeline.size,
            ),
        )


def evolve_run(cfg: GpConfig, data: Dataset, *, task_id: int | None = None) -> RunResult:
    """Evolve pipelines by genetic programming.

    All individuals of a run are scored on one internal stratified split of `data` (unless
    :attr:`GpConfig.reshuffle_split` is set). Each generation evaluates the unevaluated individuals, records
    statistics, selects (:func:`.select_standard` or :func:`.select_pareto`) and varies the selection: mutation with
    probability `mutation_rate`, crossover with a random partner from the selection with probability
    `crossover_rate`, reproduction otherwise. Elites are exempt from variation.

    Args:
        cfg: Run settings. ``RandomSearch`` mode delegates to :func:`random_search_run`.
        data: Data to search on.
        task_id: Used for logging purposes.

    Returns:
        A :class:`.RunResult` holding the best pipeline ever evaluated.

    Raises:
        SetupError: If `data` cannot be split. Raised before any evaluation.
    """
    if cfg.selection_mode is SelectionMode.RandomSearch:
        return random_search_run(cfg, data, task_id=task_id)

    start = perf_counter()
    if task_id is None:
        task_id = generate_task_id(start)

    split = _setup(cfg, data)
    log_level = settings.EVOLVE_RUN
    event_key = "EVOLVER.RUN"
    _log_enter(
        log_level.enter,
        event_key,
        task_id,
        f"Begin {cfg.selection_mode.name}-mode evolution of {cfg.population_size} pipelines for {cfg.generations}"
        f" generations on {data} using seed={cfg.seed}.",
        cfg,
    )

    rng = np.random.default_rng(derive_seed(cfg.seed, _SEARCH_STREAM))
    discovery = iter(range(1 << 62))

    def next_discovery() -> int:
        return next(discovery)

    population = [
        Individual(random_pipeline(rng, cfg.init_depth, cfg.max_operators), None, next_discovery())
        for _ in range(cfg.population_size)
    ]

    evaluator = _Evaluator(cfg, data, task_id)
    history = []
    best: Individual | None = None
    for generation in range(cfg.generations + 1):
        if cfg.reshuffle_split and generation > 0:
            split = _setup(cfg, data, generation)
            population = [Individual(ind.pipeline, None, ind.discovery) for ind in population]

        pending = [i for i, ind in enumerate(population) if not ind.evaluated]
        records = evaluator([population[i].pipeline for i in pending], split, generation)
        for i, record in zip(pending, records, strict=True):
            population[i] = Individual(population[i].pipeline, record, population[i].discovery)

        best = best_of([*population, *([best] if best else [])])
        stats = _stats(generation, population, len(pending), start)
        history.append(stats)
        _log_generation(task_id, generation, stats, best)

        if generation == cfg.generations:
            break

        if cfg.selection_mode is SelectionMode.Pareto:
            selected = select_pareto(population, rng, cfg.pareto_fraction, cfg.pareto_copies)
            protected = 0
        else:
            protected = cfg.elite_count
            selected = select_standard(population, rng, protected, cfg.tournament_size, cfg.parsimony_probability)
        population = _vary(selected, protected, cfg, rng, next_discovery)

    pareto_front: tuple[Individual, ...] = ()
    if cfg.selection_mode is SelectionMode.Pareto:
        succeeded = [ind for ind in population if not ind.failed]
        if succeeded:
            points = [(ind.accuracy, float(ind.pipeline.size)) for ind in succeeded]
            front = fast_nondominated_sort(points)[0]
            pareto_front = tuple(sorted((succeeded[i] for i in front.indices), key=lambda ind: ind.rank_key))

    result = RunResult(
        best=best,
        history=tuple(history),
        total_evaluations=evaluator.count,
        pareto_front=pareto_front,
        seed=cfg.seed,
        mode=cfg.selection_mode,
        config=cfg,
    )
    _log_exit(log_level.exit, event_key, task_id, start, f"{cfg.selection_mode.name}-mode evolution", result)
    return result


def random_search_run(cfg: GpConfig, data: Dataset, *, task_id: int | None = None) -> RunResult:
    """Evaluate ``population_size * generations`` independent random pipelines.

    Pipelines are generated with depth cap :attr:`GpConfig.random_search_depth` and scored exactly like in
    :func:`evolve_run`, in batches of `population_size`. The history records the running best per batch.

    Args:
        cfg: Run settings. The selection mode is ignored.
        data: Data to search on.
        task_id: Used for logging purposes.

    Returns:
        A :class:`.RunResult`. The best individual is ``None`` when ``generations == 0``.

    Raises:
        SetupError: If `data` cannot be split. Raised before any evaluation.
    """
    start = perf_counter()
    if task_id is None:
        task_id = generate_task_id(start)

    split = _setup(cfg, data)
    log_level = settings.RANDOM_SEARCH_RUN
    event_key = "EVOLVER.RANDOM_SEARCH"
    _log_enter(
        log_level.enter,
        event_key,
        task_id,
        f"Begin random search of {cfg.population_size * cfg.generations} pipelines on {data} using seed={cfg.seed}.",
        cfg,
    )

    rng = np.random.default_rng(derive_seed(cfg.seed, _SEARCH_STREAM))
    evaluator = _Evaluator(cfg, data, task_id)
    history = []
    best: Individual | None = None
    discovery = 0
    for batch in range(cfg.generations):
        pipelines = [
            random_pipeline(rng, cfg.random_search_depth, cfg.max_operators) for _ in range(cfg.population_size)
        ]
        records = evaluator(pipelines, split, batch)
        evaluated = []
        for p, record in zip(pipelines, records, strict=True):
            evaluated.append(Individual(p, record, discovery))
            discovery += 1

        best = best_of([*evaluated, *([best] if best else [])])
        stats = _stats(batch, evaluated, len(evaluated), start)
        stats = GenerationStats(**{**stats.to_dict(), "best_accuracy": best.accuracy if best else 0.0})
        history.append(stats)
        _log_generation(task_id, batch, stats, best)

    result = RunResult(
        best=best,
        history=tuple(history),
        total_evaluations=evaluator.count,
        seed=cfg.seed,
        mode=SelectionMode.RandomSearch,
        config=cfg,
    )
    _log_exit(log_level.exit, event_key, task_id, start, "random search", result)
    return result
