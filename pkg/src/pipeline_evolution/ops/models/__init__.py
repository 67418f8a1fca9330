"""From-scratch classifiers: CART, random forests, gradient boosting, linear models and nearest neighbors."""

from ._api import Estimator, FittedModel, predict, train_model
from ._boosting import GradientBoostingClassifier, multinomial_deviance
from ._forest import RandomForestClassifier
from ._knn import KNeighborsClassifier
from ._linear import LinearSVM, LogisticRegression, loss_and_gradient
from ._tree import DecisionTreeClassifier, Tree, grow_tree

__all__ = [
    "DecisionTreeClassifier",
    "Estimator",
    "FittedModel",
    "GradientBoostingClassifier",
    "KNeighborsClassifier",
    "LinearSVM",
    "LogisticRegression",
    "RandomForestClassifier",
    "Tree",
    "grow_tree",
    "loss_and_gradient",
    "multinomial_deviance",
    "predict",
    "train_model",
]
