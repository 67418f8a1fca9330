import dataclasses
import logging
import typing as _t
from collections.abc import Sequence

import numpy as np

from .. import types as _tt
from ..dataset import Dataset
from ..exceptions import ConfigurationError
from ..utils import make_rng
from ._penetrance import DEFAULT_MAX_ATTEMPTS, PenetranceTable, generate_pure_epistatic_table
from .exceptions import GenerationFailedError

LOGGER = logging.getLogger(__package__).getChild("epistasis")

MAX_SAMPLING_ROUNDS = 1000


@dataclasses.dataclass(frozen=True)
class EpistasisSpec:
    """Settings for :func:`simulate_epistatic_dataset`.

    Each of the `n_models` two-locus models contributes an equal additive share of the disease probability.
    """

    heritability_target: float
    """Heritability of each model, in ``(0, 1)``."""
    maf: float = 0.2
    """Minor allele frequency of the predictive SNPs."""
    n_models: int = 4
    """Number of pure epistatic two-locus models."""
    predictive_snps: int = 8
    """Number of predictive SNPs. Always ``2 * n_models``."""
    noise_snps: int = 92
    """Number of SNPs without association to the endpoint."""
    sample_size: int = 800
    """Number of rows. Half are cases."""
    tolerance: float = 0.01
    """Allowed heritability error per model."""
    noise_maf_range: tuple[float, float] = (0.05, 0.5)
    """Range of minor allele frequencies of the noise SNPs."""
    max_attempts: int = DEFAULT_MAX_ATTEMPTS
    """Attempts per penetrance table."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "noise_maf_range", tuple(self.noise_maf_range))
        problems = []
        if not 0 < self.heritability_target < 1:
            problems.append(f"heritability_target={self.heritability_target} not in (0, 1)")
        if not 0 < self.maf <= 0.5:
            problems.append(f"maf={self.maf} not in (0, 0.5]")
        if self.n_models < 1:
            problems.append(f"n_models={self.n_models} < 1")
        if self.predictive_snps != 2 * self.n_models:
            problems.append(f"predictive_snps={self.predictive_snps} != 2 * n_models={2 * self.n_models}")
        if self.noise_snps < 0:
            problems.append(f"noise_snps={self.noise_snps} < 0")
        if self.sample_size < 4:
            problems.append(f"sample_size={self.sample_size} < 4")
        if self.tolerance <= 0:
            problems.append(f"tolerance={self.tolerance} <= 0")
        low, high = self.noise_maf_range
        if not 0 < low <= high <= 0.5:
            problems.append(f"noise_maf_range={self.noise_maf_range} not within (0, 0.5]")
        if problems:
            raise ConfigurationError(f"Bad {type(self).__name__}: {'; '.join(problems)}.")

    @property
    def n_features(self) -> int:
        """Total number of SNP columns."""
        return self.predictive_snps + self.noise_snps

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        d = dataclasses.asdict(self)
        d["noise_maf_range"] = list(self.noise_maf_range)
        return d


@dataclasses.dataclass(frozen=True, eq=False)
class EpistasisSimulation:
    """Output of :func:`simulate_epistatic_dataset`."""

    dataset: Dataset
    """Genotype codes ``{0, 1, 2}`` with case (1) and control (0) labels."""
    tables: tuple[PenetranceTable, ...]
    """Penetrance table of each model."""
    predictive_columns: tuple[tuple[int, int], ...]
    """Column positions of the two SNPs of each model."""
    noise_mafs: tuple[float, ...]
    """Minor allele frequency of each noise SNP, in generation order."""
    prevalence: float
    """Fraction of cases among all sampled individuals, before balancing."""


def make_tables(spec: EpistasisSpec, rng: _tt.Rng | int) -> tuple[PenetranceTable, ...]:
    """Generate `spec.n_models` penetrance tables for `spec`."""
    rng = make_rng(rng)
    return tuple(
        generate_pure_epistatic_table(
            spec.heritability_target,
            spec.maf,
            spec.tolerance,
            rng,
            max_attempts=spec.max_attempts,
        )
        for _ in range(spec.n_models)
    )


def _disease_probability(genotypes: _tt.Matrix, tables: Sequence[PenetranceTable]) -> _tt.Vector:
    probabilities = [t.cells[genotypes[:, 2 * i], genotypes[:, 2 * i + 1]] for i, t in enumerate(tables)]
    return np.mean(probabilities, axis=0)


def simulate_epistatic_dataset(
    spec: EpistasisSpec,
    rng: _tt.Rng | int,
    tables: Sequence[PenetranceTable] | None = None,
) -> EpistasisSimulation:
    """Simulate a balanced case/control SNP dataset.

    Genotypes of the predictive SNPs are drawn in Hardy-Weinberg proportions at `spec.maf`. The disease probability
    of an individual is the mean penetrance of the models, and individuals are sampled until there are
    ``sample_size // 2`` cases and as many controls as needed to fill the rest. Noise SNPs are then drawn with a
    uniform random minor allele frequency each. Finally, columns are shuffled and named ``snp_000, snp_001, ...`` by
    position.

    Args:
        spec: Simulation settings.
        rng: Source of randomness.
        tables: Use these tables instead of generating new ones. Must match `spec.n_models`.

    Returns:
        An :class:`EpistasisSimulation`.

    Raises:
        ValueError: If `tables` doesn't match the spec.
        GenerationFailedError: If table generation fails, or too few cases or controls are sampled.

    Examples:
        >>> sim = simulate_epistatic_dataset(EpistasisSpec(0.2, sample_size=200), rng=1)
        >>> sim.dataset
        Dataset(n=200, m=100, classes=2)
        >>> sim.dataset.class_counts()
        {0: 100, 1: 100}
    """
    rng = make_rng(rng)
    if tables is None:
        tables = make_tables(spec, rng)
    elif len(tables) != spec.n_models:
        raise ValueError(f"Got {len(tables)} tables for {spec.n_models=}.")
    tables = tuple(tables)

    n_cases = spec.sample_size // 2
    n_controls = spec.sample_size - n_cases
    cases: list[np.ndarray] = []
    controls: list[np.ndarray] = []
    have_cases = have_controls = 0
    sampled = total_cases = 0
    batch_size = max(spec.sample_size, 1000)

    for _ in range(MAX_SAMPLING_ROUNDS):
        genotypes = rng.binomial(2, spec.maf, size=(batch_size, spec.predictive_snps))
        affected = rng.random(batch_size) < _disease_probability(genotypes, tables)
        sampled += batch_size
        total_cases += int(affected.sum())

        if have_cases < n_cases:
            take = genotypes[affected][: n_cases - have_cases]
            cases.append(take)
            have_cases += len(take)
        if have_controls < n_controls:
            take = genotypes[~affected][: n_controls - have_controls]
            controls.append(take)
            have_controls += len(take)
        if have_cases == n_cases and have_controls == n_controls:
            break
    else:
        raise GenerationFailedError(
            f"Sampled {sampled} individuals without reaching {n_cases} cases and {n_controls} controls.",
            best_residual=float(max(n_cases - have_cases, n_controls - have_controls)),
        )

    predictive = np.vstack(cases + controls)
    labels = np.repeat([1, 0], [n_cases, n_controls])
    low, high = spec.noise_maf_range
    noise_mafs = rng.uniform(low, high, size=spec.noise_snps)
    noise = rng.binomial(2, noise_mafs, size=(spec.sample_size, spec.noise_snps))

    genotypes = np.hstack([predictive, noise])
    column_order = rng.permutation(spec.n_features)
    row_order = rng.permutation(spec.sample_size)
    rows = genotypes[row_order][:, column_order]

    position = np.argsort(column_order)
    predictive_columns = tuple((int(position[2 * i]), int(position[2 * i + 1])) for i in range(spec.n_models))
    names = [f"snp_{i:03d}" for i in range(spec.n_features)]
    dataset = Dataset.from_arrays(rows, labels[row_order], names, class_count=2)

    prevalence = total_cases / sampled
    if LOGGER.isEnabledFor(logging.DEBUG):
        LOGGER.debug(
            f"Simulated {dataset} with {spec.n_models} models at h2={spec.heritability_target}; "
            f"predictive columns: {predictive_columns}, realized prevalence {prevalence:.3f}."
        )
    return EpistasisSimulation(
        dataset=dataset,
        tables=tables,
        predictive_columns=predictive_columns,
        noise_mafs=tuple(float(m) for m in noise_mafs),
        prevalence=prevalence,
    )
