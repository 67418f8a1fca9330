import logging
import typing as _t

from ..dataset import Dataset, SplitPair, balanced_accuracy, stratified_split
from ..ops import OperatorKind
from ..pipeline import LEAF, Model, Pipeline, fit_pipeline, make_params
from ..utils import derive_seed

LOGGER = logging.getLogger(__package__).getChild("baseline")

DEFAULT_TREES = 500
OUTER_HOLDOUT_FRACTION = 0.25


class HoldoutScore(_t.NamedTuple):
    """Outer holdout score of a fixed pipeline."""

    accuracy: float
    size: int


def rf_pipeline(n_trees: int = DEFAULT_TREES) -> Pipeline:
    """A random forest of unlimited depth on the raw features.

    Examples:
        >>> print(rf_pipeline())
        RandomForest(Leaf, max_depth=None, n_trees=500)
    """
    return Pipeline(Model(OperatorKind.RandomForest, make_params({"n_trees": n_trees, "max_depth": None}), LEAF))


def score_on_holdout(p: Pipeline, split: SplitPair, seed: int) -> HoldoutScore:
    """Fit `p` on ``split.train`` and compute the balanced accuracy on ``split.test``."""
    fitted = fit_pipeline(p, split.train, seed)
    accuracy = balanced_accuracy(split.test.labels, fitted.predict(split.test))
    return HoldoutScore(accuracy, p.size)


def run_rf_baseline(
    data: Dataset,
    seed: int,
    *,
    n_trees: int = DEFAULT_TREES,
    holdout_fraction: float = OUTER_HOLDOUT_FRACTION,
) -> HoldoutScore:
    """Score a random forest on a stratified outer holdout.

    Args:
        data: Data to split.
        seed: Seed for the split and the forest.
        n_trees: Number of trees.
        holdout_fraction: Share of `data` used for scoring.

    Returns:
        Balanced accuracy on the holdout, and the size of the forest pipeline (always 1).

    Raises:
        SplitInfeasibleError: If some class is too small to split.
        TrainingError: If the forest cannot be trained.
    """
    split = stratified_split(data, 1 - holdout_fraction, derive_seed(seed, 0))
    score = score_on_holdout(rf_pipeline(n_trees), split, derive_seed(seed, 1))
    LOGGER.info(f"Random forest with {n_trees} trees: balanced_accuracy={score.accuracy:.4f} on {split.test}.")
    return score
