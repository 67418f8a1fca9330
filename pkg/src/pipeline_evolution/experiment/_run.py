import json
import logging
import typing as _t
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from time import perf_counter

from rics.action_level import ActionLevel

from .._compat import fmt_perf
from ..datagen import EpistasisSimulation, PenetranceTable, make_tables, simulate_epistatic_dataset
from ..datagen import generate_hill_valley as _generate_hill_valley
from ..dataset import Dataset, SplitPair, stratified_split
from ..evolve import RunResult, evolve_run
from ..pipeline import Pipeline
from ..settings import logging as settings
from ..utils import derive_seed, generate_task_id
from ._baseline import rf_pipeline, score_on_holdout
from ._export import write_pipeline
from ._load import load_csv
from ._report import ArmSummary, ExperimentReport, ReplicateRecord
from ._spec import Arm, CsvSource, EpistasisSource, ExperimentSpec
from .exceptions import ExperimentError, HoldoutLeakError

LOGGER = logging.getLogger(__package__).getChild("Experiment")

# Keys passed to derive_seed(<replicate seed>, <stream>)
_SPLIT_STREAM = 0
_DATA_STREAM = 1
_ARM_STREAM = 2


class _Replicate(_t.NamedTuple):
    index: int
    seed: int
    data: Dataset | None
    split: SplitPair | None
    error: str | None


class _JobResult(_t.NamedTuple):
    record: ReplicateRecord
    run: RunResult | None
    pipeline: Pipeline | None
    seconds: float


class ExperimentOutcome(_t.NamedTuple):
    """Report and artifacts of :func:`run_experiment`."""

    report: ExperimentReport
    runs: dict[str, RunResult]
    """Search results by ``<arm>-r<replicate>``."""
    pipelines: dict[str, Pipeline]
    """Representative pipelines by ``<arm>-r<replicate>``."""


def check_holdout(search: Dataset, holdout: Dataset, source: Dataset) -> None:
    """Verify that data handed to a search or a baseline fit shares no rows with the outer holdout.

    Rows are compared by digest. A row may appear on both sides only as often as it appears in the `source` data
    that was split.

    Args:
        search: Data about to be searched on or fitted to.
        holdout: The outer holdout of the replicate.
        source: The replicate data.

    Raises:
        HoldoutLeakError: If a holdout row is present in `search`.

    Examples:
        >>> from pipeline_evolution.testing import make_blobs
        >>> data = make_blobs(10)
        >>> check_holdout(data.take(range(15)), data.take(range(15, 20)), data)
    """
    expected = source.row_digests()
    present = search.row_digests()
    leaked = [d for d, count in holdout.row_digests().items() if present[d] + count > expected[d]]
    if leaked:
        raise HoldoutLeakError(f"{len(leaked)} outer holdout rows are present in the search data.")


def _job_key(arm: Arm, replicate: int) -> str:
    return f"{arm.value}-r{replicate}"


class _Runner:
    def __init__(self, spec: ExperimentSpec, task_id: int) -> None:
        self.spec = spec
        self.task_id = task_id
        self.class_names: tuple[str, ...] | None = None
        self._data: Dataset | None = None
        self._simulation_tables: tuple[PenetranceTable, ...] = ()

        source = spec.source
        if isinstance(source, CsvSource):
            self._data = load_csv(source.path, source.label_column)
            self.class_names = self._data.class_names
        elif isinstance(source, EpistasisSource):
            self._simulation_tables = make_tables(source.spec, derive_seed(spec.seed, _DATA_STREAM))

    def replicate_data(self, seed: int) -> Dataset:
        source = self.spec.source
        if self._data is not None:
            return self._data
        if isinstance(source, EpistasisSource):
            simulation: EpistasisSimulation = simulate_epistatic_dataset(
                source.spec, derive_seed(seed, _DATA_STREAM), self._simulation_tables
            )
            return simulation.dataset
        return _generate_hill_valley(source.spec, derive_seed(seed, _DATA_STREAM))

    def prepare(self, index: int) -> _Replicate:
        seed = derive_seed(self.spec.seed, index)
        try:
            data = self.replicate_data(seed)
            split = stratified_split(data, 1 - self.spec.outer_holdout_fraction, derive_seed(seed, _SPLIT_STREAM))
        except Exception as e:  # noqa: BLE001
            if self.spec.on_replicate_failure is ActionLevel.RAISE:
                raise ExperimentError(f"Replicate {index} could not be prepared: {e}") from e
            return _Replicate(index, seed, None, None, f"{type(e).__name__}: {e}")
        return _Replicate(index, seed, data, split, None)

    def run_job(self, arm: Arm, replicate: _Replicate) -> _JobResult:
        start = perf_counter()
        arm_seed = derive_seed(replicate.seed, _ARM_STREAM)
        run = None
        pipeline = None
        try:
            if replicate.split is None or replicate.data is None:
                raise ExperimentError(f"Setup failed: {replicate.error}")
            train, holdout = replicate.split

            if arm.selection_mode is None:
                pipeline = rf_pipeline(self.spec.rf_trees)
                internal, evaluations = None, 0
            else:
                cfg = self.spec.gp.replace(seed=arm_seed, selection_mode=arm.selection_mode)
                check_holdout(train, holdout, replicate.data)
                run = evolve_run(cfg, train, task_id=self.task_id)
                if run.best is None or run.best.failed or run.best.fitness is None:
                    raise ExperimentError(f"No pipeline succeeded in {run.total_evaluations} evaluations.")
                pipeline = run.best.pipeline
                internal, evaluations = run.best.fitness.balanced_accuracy, run.total_evaluations

            check_holdout(train, holdout, replicate.data)
            score = score_on_holdout(pipeline, SplitPair(train, holdout), arm_seed)
            record = ReplicateRecord(
                arm=arm.value,
                replicate=replicate.index,
                seed=replicate.seed,
                accuracy=score.accuracy,
                size=score.size,
                internal_accuracy=internal,
                evaluations=evaluations,
                pipeline=str(pipeline),
            )
        except HoldoutLeakError:
            raise
        except Exception as e:
            if self.spec.on_replicate_failure is ActionLevel.RAISE:
                raise
            record = ReplicateRecord(
                arm=arm.value,
                replicate=replicate.index,
                seed=replicate.seed,
                accuracy=None,
                size=None,
                evaluations=0 if run is None else run.total_evaluations,
                error=f"{type(e).__name__}: {e}",
            )
            pipeline = None
            msg = f"Arm '{arm.value}' failed on replicate {replicate.index}: {record.error}"
            if self.spec.on_replicate_failure is ActionLevel.WARN:
                LOGGER.warning(msg)
            else:
                LOGGER.debug(msg)

        self._log_replicate(record, start)
        return _JobResult(record, run, pipeline, perf_counter() - start)

    def _log_replicate(self, record: ReplicateRecord, start: float) -> None:
        log_level = settings.REPLICATE.exit
        event_key = "EXPERIMENT.REPLICATE"
        if LOGGER.isEnabledFor(log_level):
            outcome = (
                f"failed: {record.error}"
                if record.failed
                else f"balanced_accuracy={record.accuracy:.4f}, size={record.size}: {record.pipeline}"
            )
            LOGGER.log(
                log_level,
                f"Replicate {record.replicate} of arm '{record.arm}' {outcome}. Done in {fmt_perf(start)}.",
                extra=dict(
                    task_id=self.task_id,
                    event_key=event_key,
                    event_stage="EXIT",
                    event_title=f"{event_key}.EXIT",
                    execution_time=perf_counter() - start,
                    arm=record.arm,
                    replicate=record.replicate,
                    accuracy=record.accuracy,
                    size=record.size,
                    failed=record.failed,
                ),
            )


def run_experiment(spec: ExperimentSpec, *, task_id: int | None = None) -> ExperimentOutcome:
    """Run every arm of `spec` on every replicate.

    Each replicate gets a seed derived from the experiment seed, and is split into a stratified outer training set
    and an outer holdout. All arms of a replicate see the same split. Search arms run on the outer training set only;
    their best pipeline is refitted on it and scored once on the outer holdout. The baseline forest is scored the
    same way.

    Jobs (one per arm and replicate) run concurrently when ``spec.workers > 1``. Records are always sorted by arm,
    then replicate, so the report body does not depend on scheduling.

    Args:
        spec: What to run.
        task_id: Used for logging purposes.

    Returns:
        An :class:`ExperimentOutcome`. The report and artifacts are also written to ``spec.output_dir``, if set.

    Raises:
        HoldoutLeakError: If the outer holdout leaks into the search data.
        ExperimentError: If an arm fails and ``spec.on_replicate_failure='raise'``.
    """
    start = perf_counter()
    if task_id is None:
        task_id = generate_task_id(start)

    log_level = settings.EXPERIMENT
    event_key = "EXPERIMENT.RUN"
    if LOGGER.isEnabledFor(log_level.enter):
        LOGGER.log(
            log_level.enter,
            f"Begin experiment '{spec.name}': arms={[a.value for a in spec.arms]}, {spec.replicates} replicates,"
            f" source={spec.source.describe()}, {spec.workers} workers.",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="ENTER",
                event_title=f"{event_key}.ENTER",
                experiment=spec.name,
                replicates=spec.replicates,
            ),
        )

    runner = _Runner(spec, task_id)
    replicates = [runner.prepare(r) for r in range(spec.replicates)]
    jobs = [(arm, rep) for arm in spec.arms for rep in replicates]

    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers, thread_name_prefix="experiment") as executor:
            results = list(executor.map(lambda job: runner.run_job(*job), jobs))
    else:
        results = [runner.run_job(*job) for job in jobs]

    arm_order = {arm.value: i for i, arm in enumerate(spec.arms)}
    results.sort(key=lambda res: (arm_order[res.record.arm], res.record.replicate))
    records = tuple(res.record for res in results)

    notes = []
    if isinstance(spec.source, CsvSource):
        notes.append("Replicates are re-seeded outer splits of the same data.")
    else:
        notes.append("Replicates are independently generated datasets.")

    report = ExperimentReport(
        name=spec.name,
        seed=spec.seed,
        arms=tuple(a.value for a in spec.arms),
        replicates=spec.replicates,
        records=records,
        summaries=tuple(ArmSummary.from_records(a.value, records) for a in spec.arms),
        source=spec.source.describe(),
        gp={k: v for k, v in spec.gp.to_dict().items() if k not in {"seed", "selection_mode"}},
        class_names=runner.class_names,
        fingerprint=spec.fingerprint,
        notes=tuple(notes),
        wall_seconds=perf_counter() - start,
        job_seconds={_job_key(Arm.parse(r.record.arm), r.record.replicate): r.seconds for r in results},
    )
    outcome = ExperimentOutcome(
        report,
        runs={_job_key(Arm.parse(r.record.arm), r.record.replicate): r.run for r in results if r.run is not None},
        pipelines={
            _job_key(Arm.parse(r.record.arm), r.record.replicate): r.pipeline
            for r in results
            if r.pipeline is not None
        },
    )
    if spec.output_dir is not None:
        write_outcome(outcome, spec.output_dir)

    if LOGGER.isEnabledFor(log_level.exit):
        medians = {s.arm: s.to_dict()["median_accuracy"] for s in report.summaries}
        failures = sum(r.failed for r in records)
        LOGGER.log(
            log_level.exit,
            f"Finished experiment '{spec.name}' in {fmt_perf(start)}. Median holdout accuracy: {medians}."
            f" Failed jobs: {failures}/{len(records)}.",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="EXIT",
                event_title=f"{event_key}.EXIT",
                execution_time=perf_counter() - start,
                experiment=spec.name,
                medians=medians,
                failures=failures,
            ),
        )
    return outcome


def write_outcome(outcome: ExperimentOutcome, output_dir: Path) -> None:
    """Write the report, per-replicate records, run documents and pipelines to `output_dir`.

    Raises:
        ExperimentError: If writing fails.
    """
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
        (output_dir / "report.json").write_text(outcome.report.to_json() + "\n", encoding="utf-8")
        outcome.report.to_frame().to_csv(output_dir / "records.csv", index=False, lineterminator="\n")

        runs_dir = output_dir / "runs"
        for key, run in outcome.runs.items():
            runs_dir.mkdir(exist_ok=True)
            (runs_dir / f"{key}.json").write_text(
                json.dumps(run.to_document(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
        for key, pipeline in outcome.pipelines.items():
            write_pipeline(pipeline, output_dir / "pipelines" / f"{key}.json")
    except OSError as e:
        raise ExperimentError(f"Cannot write experiment output to '{output_dir}': {e}") from e

    LOGGER.info(f"Wrote experiment output to '{output_dir}'.")
