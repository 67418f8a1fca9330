import dataclasses
import logging
import typing as _t
from time import perf_counter

from .. import types as _tt
from ..dataset import Dataset, SplitPair, balanced_accuracy, combine, push_guess_to_feature, stratified_split
from ..dataset.exceptions import ShapeError
from ..ops import FittedModel, FittedTransform, apply_transform, fit_transform, predict, train_model
from ..settings import logging as settings
from ..utils import Deadline, derive_seed, generate_task_id
from ._nodes import Combine, Leaf, Model, Node, Pipeline, Transform
from ._validate import validate
from .exceptions import InvalidPipelineError, PipelineError

LOGGER = logging.getLogger(__package__).getChild("evaluate_pipeline")
FAILURE_LOGGER = LOGGER.getChild("failures")

DEFAULT_BUDGET_MILLIS = 20_000
"""Default wall-time budget of a single evaluation."""
INTERNAL_TRAIN_FRACTION = 0.75
"""Training share of the internal evaluation split."""
GUESS_TAG = "guess"
"""Base name of features holding demoted guesses."""


@dataclasses.dataclass(frozen=True)
class FittedLeaf:
    """Passes its input through."""


@dataclasses.dataclass(frozen=True)
class FittedTransformNode:
    """A fitted non-model operator."""

    transform: FittedTransform
    child: "FittedNode"


@dataclasses.dataclass(frozen=True)
class FittedCombineNode:
    """A fitted feature union."""

    left: "FittedNode"
    right: "FittedNode"


@dataclasses.dataclass(frozen=True)
class FittedModelNode:
    """A trained classifier, with the name under which an incoming guess was demoted (if any)."""

    model: FittedModel
    pushed_as: str | None
    child: "FittedNode"


FittedNode = FittedLeaf | FittedTransformNode | FittedCombineNode | FittedModelNode


class _FitContext:
    def __init__(self, seed: int, deadline: Deadline) -> None:
        self.seed = seed
        self.deadline = deadline
        self.operator_index = 0

    def next_seed(self) -> int:
        self.operator_index += 1
        return derive_seed(self.seed, self.operator_index)


def _push_guess(data: Dataset, pushed_as: str | None = None) -> tuple[Dataset, str | None]:
    if data.guess is None:
        return data, None
    pushed = push_guess_to_feature(data, pushed_as or GUESS_TAG)
    return pushed, pushed.feature_names[-1]


def _fit(node: Node, train: Dataset, ctx: _FitContext) -> tuple[FittedNode, Dataset]:
    ctx.deadline.check("pipeline fitting")
    if isinstance(node, Leaf):
        return FittedLeaf(), train

    if isinstance(node, Combine):
        left, left_data = _fit(node.left, train, ctx)
        right, right_data = _fit(node.right, train, ctx)
        return FittedCombineNode(left, right), combine(left_data, right_data)

    child, data = _fit(node.child, train, ctx)
    seed = ctx.next_seed()
    if isinstance(node, Transform):
        transform, out = fit_transform(node.kind, node.param_dict, data, seed=seed, deadline=ctx.deadline)
        return FittedTransformNode(transform, child), out

    data, pushed_as = _push_guess(data)
    model = train_model(node.kind, node.param_dict, data, seed=seed, deadline=ctx.deadline)
    guess = predict(model, data)
    return FittedModelNode(model, pushed_as, child), data.with_guess(guess)


def _apply(node: FittedNode, data: Dataset, deadline: Deadline) -> Dataset:
    deadline.check("pipeline prediction")
    if isinstance(node, FittedLeaf):
        return data
    if isinstance(node, FittedCombineNode):
        return combine(_apply(node.left, data, deadline), _apply(node.right, data, deadline))
    if isinstance(node, FittedTransformNode):
        return apply_transform(node.transform, _apply(node.child, data, deadline))

    data, _ = _push_guess(_apply(node.child, data, deadline), node.pushed_as)
    guess = predict(node.model, data)
    return data.with_guess(guess)


@dataclasses.dataclass(frozen=True)
class FittedPipeline:
    """A pipeline with every operator fitted on the same training data."""

    pipeline: Pipeline
    root: FittedNode
    n_features: int
    """Width of the data the pipeline was fitted on."""

    def transform(self, ds: Dataset, deadline: Deadline | None = None) -> Dataset:
        """Run `ds` through the fitted tree. The guess column of the output holds the predictions."""
        if ds.n_features != self.n_features:
            raise ShapeError(self.n_features, ds.n_features, what="pipeline")
        return _apply(self.root, ds.with_guess(None), deadline or Deadline(0))

    def predict(self, ds: Dataset, deadline: Deadline | None = None) -> _tt.LabelVector:
        """Predictions of the root classifier."""
        out = self.transform(ds, deadline)
        if out.guess is None:
            raise PipelineError(f"Pipeline produced no guess: {self.pipeline}.")  # pragma: no cover
        return out.guess


def fit_pipeline(p: Pipeline, train: Dataset, seed: int = 0, deadline: Deadline | None = None) -> FittedPipeline:
    """Fit every operator of `p`, bottom-up.

    Each leaf yields a copy of `train`. Transform nodes fit on the output of their child. Model nodes first demote an
    incoming guess to a feature, then train on and predict the result. The new guess replaces the demoted one.

    Args:
        p: A valid pipeline.
        train: Training data.
        seed: Base seed. Each operator gets a seed derived from `seed` and its position.
        deadline: Optional cooperative time budget.

    Returns:
        A :class:`FittedPipeline`.

    Raises:
        InvalidPipelineError: If `p` does not validate (caps are not checked).
    """
    violations = validate(p, max_depth=None, max_operators=None)
    if violations:
        raise InvalidPipelineError(violations)
    root, _ = _fit(p.root, train.with_guess(None), _FitContext(seed, deadline or Deadline(0)))
    return FittedPipeline(p, root, train.n_features)


@dataclasses.dataclass(frozen=True)
class FitnessRecord:
    """Outcome of a pipeline evaluation."""

    balanced_accuracy: float
    """Balanced accuracy on the internal test split. Zero for failed evaluations."""
    size: int
    """Operator count."""
    eval_millis: int
    """Wall time of the evaluation."""
    failed: bool = False
    """Failure flag. Failed records rank below every successful record."""
    error: str | None = None
    """Description of the failure."""

    @property
    def key(self) -> tuple[bool, float, int]:
        """Sort key, ascending means better: ``(failed, -accuracy, size)``."""
        return self.failed, -self.balanced_accuracy, self.size

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: _t.Mapping[str, _t.Any]) -> "FitnessRecord":
        """Create from :meth:`to_dict` output."""
        return cls(
            balanced_accuracy=float(d["balanced_accuracy"]),
            size=int(d["size"]),
            eval_millis=int(d["eval_millis"]),
            failed=bool(d["failed"]),
            error=d.get("error"),
        )


def evaluate_pipeline(
    p: Pipeline,
    data: Dataset,
    seed: int,
    budget_millis: int = DEFAULT_BUDGET_MILLIS,
    *,
    split: SplitPair | None = None,
    train_fraction: float = INTERNAL_TRAIN_FRACTION,
    task_id: int | None = None,
) -> FitnessRecord:
    """Score a pipeline on an internal stratified holdout.

    The pipeline is fitted on the training part of the split and scored on the test part. Test labels are used for
    nothing but the final metric. Errors of any kind, including an exceeded budget, result in a failed record with
    accuracy zero; nothing is raised.

    Args:
        p: Pipeline to evaluate.
        data: Data to split.
        seed: Seed for the split (when `split` is not given) and for the operators.
        budget_millis: Wall-time budget. Zero or negative disables the budget.
        split: A precomputed split of `data`, shared by all individuals of a run.
        train_fraction: Training share of the split, used when `split` is not given.
        task_id: Used for logging purposes.

    Returns:
        A :class:`FitnessRecord`.
    """
    start = perf_counter()
    size = p.size
    if task_id is None:
        task_id = generate_task_id(start)

    log_level = settings.EVALUATE
    event_key = "PIPELINE.EVALUATE"
    if LOGGER.isEnabledFor(log_level.enter):
        LOGGER.log(
            log_level.enter,
            f"Begin evaluation of {p} using {seed=}.",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="ENTER",
                event_title=f"{event_key}.ENTER",
                size=size,
            ),
        )

    deadline = Deadline(budget_millis)
    error = None
    accuracy = 0.0
    try:
        violations = validate(p, max_depth=None, max_operators=None)
        if violations:
            raise InvalidPipelineError(violations)
        train, test = split or stratified_split(data, train_fraction, seed)
        fitted = fit_pipeline(p, train, seed, deadline)
        accuracy = balanced_accuracy(test.labels, fitted.predict(test, deadline))
        deadline.check("evaluation")
    except Exception as e:  # noqa: BLE001
        error = f"{type(e).__name__}: {e}"
        accuracy = 0.0
        if FAILURE_LOGGER.isEnabledFor(logging.DEBUG):
            FAILURE_LOGGER.debug(f"Evaluation of {p} failed: {error}", extra=dict(task_id=task_id))

    execution_time = perf_counter() - start
    record = FitnessRecord(
        balanced_accuracy=accuracy,
        size=size,
        eval_millis=round(1000 * execution_time),
        failed=error is not None,
        error=error,
    )

    if LOGGER.isEnabledFor(log_level.exit):
        LOGGER.log(
            log_level.exit,
            f"Finished evaluation of {p}: balanced_accuracy={accuracy:.4f}, failed={record.failed}.",
            extra=dict(
                task_id=task_id,
                event_key=event_key,
                event_stage="EXIT",
                event_title=f"{event_key}.EXIT",
                execution_time=execution_time,
                balanced_accuracy=accuracy,
                size=size,
                failed=record.failed,
            ),
        )
    return record
