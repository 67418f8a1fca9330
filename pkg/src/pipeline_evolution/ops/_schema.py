import dataclasses
import math
import typing as _t

import numpy as np

from .. import types as _tt
from ._kinds import OperatorKind
from .exceptions import ParameterError


@dataclasses.dataclass(frozen=True)
class IntRange:
    """Integers in ``[low, high]``, sampled uniformly."""

    name: str
    low: int
    high: int
    default: int

    def sample(self, rng: _tt.Rng) -> int:
        """Draw a value."""
        return int(rng.integers(self.low, self.high + 1))

    def check(self, value: _t.Any) -> str | None:
        """Return a problem description, or ``None`` if `value` is in the domain."""
        if isinstance(value, bool) or not isinstance(value, int | np.integer):
            return f"{self.name}={value!r} is not an integer"
        if not self.low <= value <= self.high:
            return f"{self.name}={value} not in [{self.low}, {self.high}]"
        return None


@dataclasses.dataclass(frozen=True)
class RealRange:
    """Reals in ``[low, high]``, sampled uniformly or log-uniformly."""

    name: str
    low: float
    high: float
    default: float
    log: bool = False

    def sample(self, rng: _tt.Rng) -> float:
        """Draw a value."""
        if self.log:
            return float(math.exp(rng.uniform(math.log(self.low), math.log(self.high))))
        return float(rng.uniform(self.low, self.high))

    def check(self, value: _t.Any) -> str | None:
        """Return a problem description, or ``None`` if `value` is in the domain."""
        if isinstance(value, bool) or not isinstance(value, int | float | np.integer | np.floating):
            return f"{self.name}={value!r} is not a real number"
        if not self.low <= value <= self.high:
            return f"{self.name}={value} not in [{self.low}, {self.high}]"
        return None


@dataclasses.dataclass(frozen=True)
class Choice:
    """A finite set of options, sampled uniformly."""

    name: str
    options: tuple[_tt.ParamValue, ...]
    default: _tt.ParamValue

    def sample(self, rng: _tt.Rng) -> _tt.ParamValue:
        """Draw a value."""
        return self.options[int(rng.integers(len(self.options)))]

    def check(self, value: _t.Any) -> str | None:
        """Return a problem description, or ``None`` if `value` is in the domain."""
        if isinstance(value, bool) or value not in self.options:
            return f"{self.name}={value!r} not in {list(self.options)}"
        return None


Dimension = IntRange | RealRange | Choice
"""A single named parameter domain."""

_DEPTHS: tuple[_tt.ParamValue, ...] = (None, *range(1, 11))

SCHEMAS: dict[OperatorKind, tuple[Dimension, ...]] = {
    OperatorKind.StandardScale: (),
    OperatorKind.RobustScale: (),
    OperatorKind.PolynomialFeatures: (),
    OperatorKind.RandomizedPCA: (
        # Clamped to min(m, n) - 1 when fitted.
        IntRange("n_components", 1, 64, 2),
        IntRange("iterated_power", 1, 5, 3),
    ),
    OperatorKind.VarianceThreshold: (RealRange("threshold", 0.0, 0.25, 0.0),),
    OperatorKind.SelectKBest: (IntRange("k", 1, 100, 10),),
    OperatorKind.SelectPercentile: (Choice("percentile", tuple(range(5, 101, 5)), 50),),
    OperatorKind.RFE: (IntRange("k", 1, 100, 10),),
    OperatorKind.DecisionTree: (Choice("max_depth", _DEPTHS, None),),
    OperatorKind.RandomForest: (
        IntRange("n_trees", 10, 500, 100),
        Choice("max_depth", _DEPTHS, None),
    ),
    OperatorKind.GradientBoosting: (
        IntRange("n_stages", 10, 500, 100),
        RealRange("learning_rate", 0.01, 1.0, 0.1, log=True),
        IntRange("max_depth", 1, 5, 3),
    ),
    OperatorKind.LogisticRegression: (RealRange("alpha", 1e-4, 1e2, 1e-3, log=True),),
    OperatorKind.LinearSVM: (RealRange("alpha", 1e-4, 1e2, 1e-3, log=True),),
    OperatorKind.KNN: (IntRange("n_neighbors", 1, 50, 5),),
}
"""Parameter schema of every operator. Data-dependent bounds (`k`, `n_components`) are clamped at fit time."""


def sample_params(kind: OperatorKind, rng: _tt.Rng) -> dict[str, _tt.ParamValue]:
    """Draw a full parameter vector for `kind`.

    Examples:
        >>> import numpy as np
        >>> params = sample_params(OperatorKind.KNN, np.random.default_rng(0))
        >>> list(params), 1 <= params["n_neighbors"] <= 50
        (['n_neighbors'], True)
    """
    return {dim.name: dim.sample(rng) for dim in SCHEMAS[kind]}


def validate_params(kind: OperatorKind, params: _tt.Params) -> list[str]:
    """Check `params` against the schema of `kind`.

    Omitted dimensions are allowed; defaults apply.

    Returns:
        A list of problems. Empty if `params` is valid.

    Examples:
        >>> validate_params(OperatorKind.KNN, {"n_neighbors": 0})
        ['n_neighbors=0 not in [1, 50]']
        >>> validate_params(OperatorKind.StandardScale, {"k": 1})
        ["unknown parameter 'k'"]
    """
    dims = {dim.name: dim for dim in SCHEMAS[kind]}
    problems = []
    for name, value in params.items():
        dim = dims.get(name)
        if dim is None:
            problems.append(f"unknown parameter {name!r}")
            continue
        problem = dim.check(value)
        if problem:
            problems.append(problem)
    return problems


def resolve_params(kind: OperatorKind, params: _tt.Params) -> dict[str, _t.Any]:
    """Validate `params` and fill in defaults.

    Raises:
        ParameterError: If `params` do not validate.
    """
    problems = validate_params(kind, params)
    if problems:
        raise ParameterError(kind.value, problems)
    return {dim.name: params.get(dim.name, dim.default) for dim in SCHEMAS[kind]}
