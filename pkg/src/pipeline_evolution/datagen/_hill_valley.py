import dataclasses
import typing as _t

import numpy as np

from .. import types as _tt
from ..dataset import Dataset
from ..exceptions import ConfigurationError
from ..utils import make_rng

HILL = 1
VALLEY = 0


@dataclasses.dataclass(frozen=True)
class HillValleySpec:
    """Settings for :func:`generate_hill_valley`."""

    series_length: int = 100
    """Number of points per series."""
    noise_std: float = 0.0
    """Standard deviation of the noise, relative to a bump of unit height."""
    n_samples: int = 606
    """Number of series. Hills and valleys are balanced."""

    def __post_init__(self) -> None:
        if self.series_length < 8:
            raise ConfigurationError(f"Bad {type(self).__name__}: series_length={self.series_length} < 8.")
        if self.noise_std < 0:
            raise ConfigurationError(f"Bad {type(self).__name__}: noise_std={self.noise_std} < 0.")
        if self.n_samples < 2:
            raise ConfigurationError(f"Bad {type(self).__name__}: n_samples={self.n_samples} < 2.")

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return dataclasses.asdict(self)


def generate_hill_valley(spec: HillValleySpec, rng: _tt.Rng | int) -> Dataset:
    """Generate series with a single bump (hill, class 1) or dip (valley, class 0).

    Each series is ``scale * (offset + sign * height * exp(-(t - center)**2 / (2 * width**2)) + noise)``, where
    `center` is uniform in the middle 40% of the series, `width` uniform in ``[L/40, L/12]``, `height` uniform in
    ``[0.5, 1.5]``, `offset` uniform in ``[-5, 5]`` and `scale` log-uniform in ``[0.1, 1000]``. Features are named
    ``X1, X2, ...``.

    Args:
        spec: Generator settings.
        rng: Source of randomness.

    Returns:
        A :class:`.Dataset` with `spec.n_samples` rows and `spec.series_length` features.

    Examples:
        >>> ds = generate_hill_valley(HillValleySpec(), rng=0)
        >>> ds
        Dataset(n=606, m=100, classes=2)
        >>> ds.feature_names[:3]
        ('X1', 'X2', 'X3')
    """
    rng = make_rng(rng)
    n, length = spec.n_samples, spec.series_length

    labels = np.repeat([HILL, VALLEY], [n // 2, n - n // 2])
    labels = rng.permutation(labels)
    sign = np.where(labels == HILL, 1.0, -1.0)[:, None]

    t = np.arange(length, dtype=np.float64)[None, :]
    center = rng.uniform(0.3 * length, 0.7 * length, size=(n, 1))
    width = rng.uniform(length / 40, length / 12, size=(n, 1))
    height = rng.uniform(0.5, 1.5, size=(n, 1))
    offset = rng.uniform(-5.0, 5.0, size=(n, 1))
    scale = np.exp(rng.uniform(np.log(0.1), np.log(1000.0), size=(n, 1)))

    series = offset + sign * height * np.exp(-((t - center) ** 2) / (2 * width**2))
    if spec.noise_std > 0:
        series = series + rng.normal(0.0, spec.noise_std, size=series.shape)
    rows = scale * series

    names = [f"X{i + 1}" for i in range(length)]
    return Dataset.from_arrays(rows, labels, names, class_count=2)


def classify_hill_valley(rows: _tt.Matrix) -> _tt.LabelVector:
    """Rule-based labels: a row is a hill if its maximum is further from its median than its minimum is.

    Examples:
        >>> classify_hill_valley(np.array([[0, 0, 3, 0, 0], [5, 5, 1, 5, 5]])).tolist()
        [1, 0]
    """
    rows = np.asarray(rows, dtype=np.float64)
    median = np.median(rows, axis=1)
    is_hill = rows.max(axis=1) - median > median - rows.min(axis=1)
    return np.where(is_hill, HILL, VALLEY)
