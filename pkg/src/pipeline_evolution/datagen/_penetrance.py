import dataclasses
import logging
import typing as _t

import numpy as np

from .. import types as _tt
from ..utils import make_rng
from .exceptions import GenerationFailedError, UndefinedHeritabilityError

LOGGER = logging.getLogger(__package__).getChild("penetrance")

MARGINAL_TOLERANCE = 1e-6
"""Maximum deviation of a marginal penetrance from the prevalence in a pure epistatic table."""
DEFAULT_MAX_ATTEMPTS = 2000
_PREVALENCE_GRID = np.linspace(0.005, 0.995, 199)


def genotype_frequencies(maf: float) -> _tt.Vector:
    """Hardy-Weinberg frequencies of 0, 1 and 2 copies of the minor allele.

    Examples:
        >>> genotype_frequencies(0.2).round(4).tolist()
        [0.64, 0.32, 0.04]
    """
    return np.array([(1 - maf) ** 2, 2 * maf * (1 - maf), maf**2])


@dataclasses.dataclass(frozen=True, eq=False)
class PenetranceTable:
    """Disease probability per two-locus genotype.

    Both loci share the same minor allele frequency. The cell ``cells[i, j]`` is the disease probability given `i`
    and `j` copies of the minor allele at the first and second locus.
    """

    maf: float
    """Minor allele frequency of both loci, in ``(0, 0.5]``."""
    cells: _tt.Matrix
    """A ``3x3`` matrix of probabilities."""

    def __post_init__(self) -> None:
        cells = np.array(self.cells, dtype=np.float64)
        if cells.shape != (3, 3):
            raise ValueError(f"Penetrance tables must be 3x3, but got shape {cells.shape}.")
        if not ((cells >= 0) & (cells <= 1)).all():
            raise ValueError(f"Penetrance values must be in [0, 1], but got\n{cells}.")
        if not 0 < self.maf <= 0.5:
            raise ValueError(f"Minor allele frequency must be in (0, 0.5], but got {self.maf=}.")
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    @property
    def genotype_frequencies(self) -> _tt.Vector:
        """Hardy-Weinberg frequencies of a single locus."""
        return genotype_frequencies(self.maf)

    @property
    def prevalence(self) -> float:
        """Population disease probability `K`."""
        p = self.genotype_frequencies
        return float(p @ self.cells @ p)

    @property
    def marginal_rows(self) -> _tt.Vector:
        """Disease probability given the genotype of the first locus."""
        return self.cells @ self.genotype_frequencies

    @property
    def marginal_columns(self) -> _tt.Vector:
        """Disease probability given the genotype of the second locus."""
        return self.genotype_frequencies @ self.cells

    @property
    def marginal_deviation(self) -> float:
        """Largest deviation of a marginal penetrance from the prevalence. Zero for pure epistasis."""
        k = self.prevalence
        return float(max(np.abs(self.marginal_rows - k).max(), np.abs(self.marginal_columns - k).max()))

    def is_pure(self, tolerance: float = MARGINAL_TOLERANCE) -> bool:
        """``True`` if neither locus has a marginal effect."""
        return self.marginal_deviation <= tolerance

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return {"maf": self.maf, "cells": self.cells.tolist()}

    @classmethod
    def from_dict(cls, d: _t.Mapping[str, _t.Any]) -> "PenetranceTable":
        """Create from :meth:`to_dict` output."""
        return cls(float(d["maf"]), np.asarray(d["cells"], dtype=np.float64))


def heritability_of(t: PenetranceTable) -> float:
    """Broad-sense heritability of a dichotomous trait.

    With prevalence ``K = sum P(g) f(g)``, the heritability is ``sum P(g) (f(g) - K)**2 / (K (1 - K))``.

    Raises:
        UndefinedHeritabilityError: If the prevalence is 0 or 1.

    Examples:
        >>> xor = PenetranceTable(0.5, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
        >>> heritability_of(xor)
        1.0
    """
    k = t.prevalence
    if not 1e-12 < k < 1 - 1e-12:
        raise UndefinedHeritabilityError(f"Heritability is undefined for prevalence {k=}.")
    p = t.genotype_frequencies
    weights = np.outer(p, p)
    return float((weights * (t.cells - k) ** 2).sum() / (k * (1 - k)))


def project_pure(deviations: _tt.Matrix, maf: float) -> _tt.Matrix:
    """Remove the marginal effects of a deviation table.

    Returns ``(I - 1 p^T) D (I - p 1^T)``, whose frequency-weighted row and column means are all zero.
    """
    p = genotype_frequencies(maf)
    ones = np.ones(3)
    eye = np.eye(3)
    return (eye - np.outer(ones, p)) @ deviations @ (eye - np.outer(p, ones))


def _random_direction(maf: float, rng: _tt.Rng) -> _tt.Matrix:
    if rng.random() < 0.5:
        direction = project_pure(rng.standard_normal((3, 3)), maf)
    else:
        p = genotype_frequencies(maf)
        u = rng.standard_normal(3)
        v = u if rng.random() < 0.5 else rng.standard_normal(3)
        direction = np.outer(u - p @ u, v - p @ v)
    return direction


def _max_heritability(direction: _tt.Matrix, variance: float) -> _tt.Vector:
    """Largest heritability reachable along `direction` without leaving [0, 1], per prevalence on the grid."""
    k = _PREVALENCE_GRID[:, None]
    d = direction.ravel()[None, :]
    with np.errstate(divide="ignore"):
        limits = np.where(d > 0, (1 - k) / d, np.where(d < 0, k / -d, np.inf))
    c_max = limits.min(axis=1)
    return c_max**2 * variance / (_PREVALENCE_GRID * (1 - _PREVALENCE_GRID))


def generate_pure_epistatic_table(
    target_h2: float,
    maf: float,
    tolerance: float = 0.01,
    rng: _tt.Rng | int = 0,
    *,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> PenetranceTable:
    """Random pure epistatic penetrance table with the requested heritability.

    Each attempt draws a random deviation direction, projects it onto the tables without marginal effects, and finds
    the prevalences at which the direction can be scaled to `target_h2` while staying within ``[0, 1]``. When there
    are any, one is drawn at random and the scaled table is returned. Otherwise, the attempt is discarded.

    Args:
        target_h2: Heritability in ``(0, 1)``.
        maf: Minor allele frequency in ``(0, 0.5]``.
        tolerance: Allowed heritability error.
        rng: Source of randomness.
        max_attempts: Number of directions to try.

    Returns:
        A :class:`PenetranceTable` with marginal deviation below :data:`MARGINAL_TOLERANCE` and heritability within
        `tolerance` of `target_h2`.

    Raises:
        ValueError: If `target_h2` or `maf` is out of range.
        GenerationFailedError: If no attempt succeeded.

    Examples:
        >>> table = generate_pure_epistatic_table(0.4, 0.2, rng=2016)
        >>> table.is_pure(), abs(heritability_of(table) - 0.4) <= 0.01
        (True, True)
    """
    if not 0 < target_h2 < 1:
        raise ValueError(f"Target heritability must be in (0, 1), but got {target_h2=}.")
    if not 0 < maf <= 0.5:
        raise ValueError(f"Minor allele frequency must be in (0, 0.5], but got {maf=}.")

    rng = make_rng(rng)
    p = genotype_frequencies(maf)
    weights = np.outer(p, p)
    best_residual = target_h2

    for attempt in range(max_attempts):
        direction = _random_direction(maf, rng)
        variance = float((weights * direction**2).sum())
        if variance <= 1e-12:
            continue

        reachable = _max_heritability(direction, variance)
        best_residual = min(best_residual, max(0.0, target_h2 - float(reachable.max())))
        feasible = np.flatnonzero(reachable >= target_h2)
        if not feasible.size:
            continue

        k = float(_PREVALENCE_GRID[feasible[int(rng.integers(feasible.size))]])
        scale = np.sqrt(target_h2 * k * (1 - k) / variance)
        cells = np.clip(k + scale * direction, 0.0, 1.0)
        table = PenetranceTable(maf, cells)
        if table.is_pure() and abs(heritability_of(table) - target_h2) <= tolerance:
            if LOGGER.isEnabledFor(logging.DEBUG):
                LOGGER.debug(f"Found table with {target_h2=} and {maf=} after {attempt + 1} attempts.")
            return table

    raise GenerationFailedError(
        f"Could not generate a pure epistatic table with {target_h2=} and {maf=} in {max_attempts} attempts.",
        best_residual,
    )
