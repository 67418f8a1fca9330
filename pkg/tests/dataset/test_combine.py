import pytest

from pipeline_evolution.dataset import Dataset, combine, push_guess_to_feature
from pipeline_evolution.dataset.exceptions import IncompatibleCombineError, NoGuessError


@pytest.fixture
def base() -> Dataset:
    return Dataset.from_arrays([[1.0, 2.0], [3.0, 4.0]], [0, 1], ["a", "b"])


def test_combine_keeps_left_features(base):
    other = base.with_features([[9.0, 8.0], [7.0, 6.0]], ["b", "c"])
    out = combine(base, other)
    assert out.feature_names == ("a", "b", "c")
    assert out.rows.tolist() == [[1.0, 2.0, 8.0], [3.0, 4.0, 6.0]]


@pytest.mark.parametrize("left_guess, right_guess, expected", [([0, 0], [1, 1], [0, 0]), (None, [1, 1], [1, 1])])
def test_combine_guess(base, left_guess, right_guess, expected):
    out = combine(base.with_guess(left_guess), base.with_guess(right_guess))
    assert out.guess is not None and out.guess.tolist() == expected


def test_combine_self(base):
    assert combine(base, base).equals(base)


@pytest.mark.parametrize(
    "other",
    [
        Dataset.from_arrays([[1.0]], [0], ["c"], class_count=2),
        Dataset.from_arrays([[1.0], [2.0]], [1, 0], ["c"]),
        Dataset.from_arrays([[1.0], [2.0]], [0, 1], ["c"], class_count=3),
    ],
)
def test_incompatible(base, other):
    with pytest.raises(IncompatibleCombineError):
        combine(base, other)


def test_push_guess(base):
    out = push_guess_to_feature(base.with_guess([1, 0]), "a")
    assert out.feature_names == ("a", "b", "a_1")
    assert out.rows[:, -1].tolist() == [1.0, 0.0]
    assert out.guess is None


def test_push_without_guess(base):
    with pytest.raises(NoGuessError):
        push_guess_to_feature(base, "guess")
