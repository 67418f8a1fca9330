from enum import Enum
from typing import Union


class Category(Enum):
    """Operator categories.

    Examples:
        >>> Category.parse("Selector")
        <Category.SELECTOR: 'selector'>
    """

    _ignore_ = ["ParseType"]  # noqa:  RUF012

    ParseType = Union[str, "Category"]  # Type checking
    """Types that may be interpreted as a ``Category``."""

    PREPROCESSOR = "preprocessor"
    """Feature scaling and construction."""
    DECOMPOSITION = "decomposition"
    """Projections onto a lower-dimensional basis."""
    SELECTOR = "selector"
    """Feature subset selection."""
    MODEL = "model"
    """Classifiers. Writes the guess column."""

    @classmethod
    def parse(cls, arg: ParseType) -> "Category":
        """Convert to ``Category``.

        Raises:
            ValueError: If the argument could not be converted.
        """
        if isinstance(arg, Category):
            return arg
        s = str(arg).strip().lower()
        for c in Category:
            if s in {c.value, c.name.lower()}:
                return c
        raise ValueError(f"Could not convert {arg=} to Category. Correct input: {[c.value for c in Category]}.")


Category.ParseType = Union[str, Category]


class OperatorKind(Enum):
    """Enumeration of all pipeline operators.

    The category of an operator is a function of its kind.

    Examples:
        >>> OperatorKind.KNN.category
        <Category.MODEL: 'model'>
        >>> OperatorKind.parse("select-k-best")
        <OperatorKind.SelectKBest: 'SelectKBest'>
    """

    _ignore_ = ["ParseType"]  # noqa:  RUF012

    ParseType = Union[str, "OperatorKind"]  # Type checking
    """Types that may be interpreted as an ``OperatorKind``."""

    StandardScale = "StandardScale"
    RobustScale = "RobustScale"
    PolynomialFeatures = "PolynomialFeatures"
    RandomizedPCA = "RandomizedPCA"
    VarianceThreshold = "VarianceThreshold"
    SelectKBest = "SelectKBest"
    SelectPercentile = "SelectPercentile"
    RFE = "RFE"
    DecisionTree = "DecisionTree"
    RandomForest = "RandomForest"
    GradientBoosting = "GradientBoosting"
    LogisticRegression = "LogisticRegression"
    LinearSVM = "LinearSVM"
    KNN = "KNN"

    @property
    def category(self) -> Category:
        """Category of this operator."""
        return _CATEGORIES[self]

    @property
    def is_model(self) -> bool:
        """``True`` for classifiers."""
        return self.category is Category.MODEL

    @classmethod
    def of_category(cls, category: Category.ParseType) -> tuple["OperatorKind", ...]:
        """All kinds in `category`, in declaration order."""
        category = Category.parse(category)
        return tuple(k for k in cls if k.category is category)

    @classmethod
    def non_models(cls) -> tuple["OperatorKind", ...]:
        """All kinds that may appear in a ``Transform`` node."""
        return tuple(k for k in cls if not k.is_model)

    @classmethod
    def parse(cls, arg: ParseType) -> "OperatorKind":
        """Convert to ``OperatorKind``.

        Matching ignores case, dashes and underscores.

        Raises:
            ValueError: If the argument could not be converted.
        """
        if isinstance(arg, OperatorKind):
            return arg

        key = _normalize(str(arg))
        for k in OperatorKind:
            if key == _normalize(k.value):
                return k
        raise ValueError(f"Could not convert {arg=} to OperatorKind. Correct input: {[k.value for k in OperatorKind]}.")


OperatorKind.ParseType = Union[str, OperatorKind]


def _normalize(s: str) -> str:
    return s.strip().lower().replace("-", "").replace("_", "")


_CATEGORIES = {
    OperatorKind.StandardScale: Category.PREPROCESSOR,
    OperatorKind.RobustScale: Category.PREPROCESSOR,
    OperatorKind.PolynomialFeatures: Category.PREPROCESSOR,
    OperatorKind.RandomizedPCA: Category.DECOMPOSITION,
    OperatorKind.VarianceThreshold: Category.SELECTOR,
    OperatorKind.SelectKBest: Category.SELECTOR,
    OperatorKind.SelectPercentile: Category.SELECTOR,
    OperatorKind.RFE: Category.SELECTOR,
    OperatorKind.DecisionTree: Category.MODEL,
    OperatorKind.RandomForest: Category.MODEL,
    OperatorKind.GradientBoosting: Category.MODEL,
    OperatorKind.LogisticRegression: Category.MODEL,
    OperatorKind.LinearSVM: Category.MODEL,
    OperatorKind.KNN: Category.MODEL,
}
