"""Labeled numeric datasets, stratified splitting, combination and the balanced accuracy metric."""

from ._combine import combine, push_guess_to_feature
from ._dataset import Dataset, make_unique
from ._metrics import balanced_accuracy
from ._split import SplitPair, allocate_train_counts, stratified_split

__all__ = [
    "Dataset",
    "SplitPair",
    "allocate_train_counts",
    "balanced_accuracy",
    "combine",
    "make_unique",
    "push_guess_to_feature",
    "stratified_split",
]
