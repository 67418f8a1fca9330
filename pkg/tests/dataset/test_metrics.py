import numpy as np
import pytest

from pipeline_evolution.dataset import balanced_accuracy
from pipeline_evolution.dataset.exceptions import LengthMismatchError


def _confusion_oracle(truth: list[int], preds: list[int]) -> float:
    recalls = []
    for c in sorted(set(truth)):
        total = sum(t == c for t in truth)
        hits = sum(t == c and p == c for t, p in zip(truth, preds, strict=True))
        recalls.append(hits / total)
    return sum(recalls) / len(recalls)


@pytest.mark.parametrize("seed", range(50))
def test_matches_confusion_matrix(seed):
    rng = np.random.default_rng(seed)
    class_count = int(rng.integers(2, 5))
    n = int(rng.integers(1, 30))
    truth = rng.integers(0, class_count, size=n).tolist()
    preds = rng.integers(0, class_count, size=n).tolist()
    assert balanced_accuracy(truth, preds) == pytest.approx(_confusion_oracle(truth, preds), abs=1e-12)


@pytest.mark.parametrize("class_count", [2, 3, 5])
def test_constant_predictor(class_count):
    truth = np.repeat(np.arange(class_count), np.arange(1, class_count + 1) * 3)
    assert balanced_accuracy(truth, np.zeros_like(truth)) == pytest.approx(1 / class_count)


def test_perfect():
    assert balanced_accuracy([0, 1, 2, 1], [0, 1, 2, 1]) == 1.0


def test_single_class_present():
    assert balanced_accuracy([1, 1], [1, 0]) == 0.5


@pytest.mark.parametrize("truth, preds", [([0, 1], [0]), ([], [])])
def test_length_mismatch(truth, preds):
    with pytest.raises(LengthMismatchError):
        balanced_accuracy(truth, preds)
