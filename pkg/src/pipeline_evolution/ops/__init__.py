"""Pipeline operators: preprocessors, decompositions, feature selectors and classifiers.

Each operator has a :class:`OperatorKind`, a :class:`Category` and a parameter schema in :data:`SCHEMAS`. Non-model
operators are fitted with :func:`fit_transform`; models with :func:`train_model`.
"""

from ._kinds import Category, OperatorKind
from ._schema import SCHEMAS, Choice, Dimension, IntRange, RealRange, resolve_params, sample_params, validate_params
from ._statistics import anova_f_scores
from ._transforms import FittedTransform, apply_transform, fit_transform
from .models import FittedModel, predict, train_model

__all__ = [
    "SCHEMAS",
    "Category",
    "Choice",
    "Dimension",
    "FittedModel",
    "FittedTransform",
    "IntRange",
    "OperatorKind",
    "RealRange",
    "anova_f_scores",
    "apply_transform",
    "fit_transform",
    "predict",
    "resolve_params",
    "sample_params",
    "train_model",
    "validate_params",
]
