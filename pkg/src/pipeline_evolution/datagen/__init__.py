"""Simulated datasets: pure epistatic SNP data and hill/valley series."""

from ._epistasis import EpistasisSimulation, EpistasisSpec, make_tables, simulate_epistatic_dataset
from ._hill_valley import HillValleySpec, classify_hill_valley, generate_hill_valley
from ._io import LABEL_COLUMN, SimulationMetadata, metadata_path, to_frame, write_csv
from ._penetrance import (
    PenetranceTable,
    generate_pure_epistatic_table,
    genotype_frequencies,
    heritability_of,
    project_pure,
)

__all__ = [
    "LABEL_COLUMN",
    "EpistasisSimulation",
    "EpistasisSpec",
    "HillValleySpec",
    "PenetranceTable",
    "SimulationMetadata",
    "classify_hill_valley",
    "generate_hill_valley",
    "generate_pure_epistatic_table",
    "genotype_frequencies",
    "heritability_of",
    "make_tables",
    "metadata_path",
    "project_pure",
    "simulate_epistatic_dataset",
    "to_frame",
    "write_csv",
]
