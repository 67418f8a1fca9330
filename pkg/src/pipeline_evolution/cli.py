"""Command-line interface.

Exit codes: ``0`` on success, ``1`` for usage and configuration errors, ``2`` for data errors and ``3`` for run
failures.
"""

import argparse
import json
import logging
import sys
import typing as _t
from collections.abc import Sequence
from pathlib import Path

import pandas as pd

from . import __version__
from ._compat import fmt_sec
from .datagen import (
    EpistasisSpec,
    HillValleySpec,
    SimulationMetadata,
    generate_hill_valley,
    simulate_epistatic_dataset,
    write_csv,
)
from .datagen.exceptions import DataGenerationError
from .dataset.exceptions import DatasetError
from .evolve import GpConfig, SelectionMode, evolve_run
from .evolve.exceptions import SetupError
from .exceptions import ConfigurationError, PipelineEvolutionError
from .experiment import ExperimentFactory, export_pipeline, load_csv, read_run, run_experiment, run_rf_baseline
from .experiment.exceptions import CsvParseError, SchemaError

LOGGER = logging.getLogger(__package__).getChild("cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUN = 3

_DATA_ERRORS = (DatasetError, DataGenerationError, CsvParseError, SchemaError, SetupError)


class UsageError(Exception):
    """Bad command-line arguments."""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> _t.NoReturn:
        raise UsageError(f"{self.prog}: error: {message}")


def _gen_epistasis(args: argparse.Namespace) -> int:
    spec = EpistasisSpec(
        heritability_target=args.heritability,
        maf=args.maf,
        n_models=args.models,
        predictive_snps=2 * args.models,
        noise_snps=args.noise_snps,
        sample_size=args.sample_size,
    )
    simulation = simulate_epistatic_dataset(spec, args.seed)
    metadata = SimulationMetadata.for_epistasis(spec, args.seed, simulation)
    print(write_csv(simulation.dataset, args.out, metadata=metadata))
    return EXIT_OK


def _gen_hillvalley(args: argparse.Namespace) -> int:
    spec = HillValleySpec(series_length=args.length, noise_std=args.noise, n_samples=args.samples)
    ds = generate_hill_valley(spec, args.seed)
    print(write_csv(ds, args.out, metadata=SimulationMetadata.for_hill_valley(spec, args.seed)))
    return EXIT_OK


def _evolve(args: argparse.Namespace) -> int:
    data = load_csv(args.data, args.label_col)
    cfg = GpConfig(
        population_size=args.pop,
        generations=args.gens,
        selection_mode=SelectionMode.parse(args.mode),
        seed=args.seed,
        max_workers=args.workers,
        eval_budget_millis=args.budget_millis,
    )
    run = evolve_run(cfg, data)
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(run.to_document(), indent=2, sort_keys=True) + "\n", encoding="utf-8")

    if run.best is None or run.best.failed:
        print(f"No pipeline succeeded in {run.total_evaluations} evaluations.", file=sys.stderr)
        return EXIT_RUN
    print(f"balanced_accuracy={run.best.accuracy:.4f} size={run.best.pipeline.size} {run.best.pipeline}")
    return EXIT_OK


def _baseline_rf(args: argparse.Namespace) -> int:
    data = load_csv(args.data, args.label_col)
    score = run_rf_baseline(data, args.seed, n_trees=args.trees)
    print(f"balanced_accuracy={score.accuracy:.4f} size={score.size}")
    return EXIT_OK


def _bench(args: argparse.Namespace) -> int:
    spec = ExperimentFactory(args.spec, preset="full" if args.full_scale else None).create()
    changes: dict[str, _t.Any] = {}
    if args.workers is not None:
        changes["workers"] = args.workers
    if args.out is not None:
        changes["output_dir"] = Path(args.out)
    if changes:
        spec = spec.replace(**changes)

    report = run_experiment(spec).report
    summary = pd.DataFrame([s.to_dict() for s in report.summaries]).set_index("arm")
    print(summary.to_string(float_format="{:.4f}".format))
    print(f"Finished {len(report.records)} jobs in {fmt_sec(report.wall_seconds)}.")
    return EXIT_OK if all(s.n > 0 for s in report.summaries) else EXIT_RUN


def _export(args: argparse.Namespace) -> int:
    document, text = export_pipeline(read_run(args.run), args.out)
    print(text.read_text(encoding="utf-8").strip())
    print(document)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = _ArgumentParser(prog="pipeline-evolution", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Root log level. Default is %(default)s.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = subparsers.add_parser("gen-epistasis", help="Simulate pure epistatic SNP data.")
    p.add_argument("--heritability", type=float, required=True, help="Heritability of each model.")
    p.add_argument("--maf", type=float, default=0.2, help="Minor allele frequency of predictive SNPs.")
    p.add_argument("--sample-size", type=int, default=800)
    p.add_argument("--models", type=int, default=4, help="Number of two-locus models.")
    p.add_argument("--noise-snps", type=int, default=92)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="Output CSV file.")
    p.set_defaults(func=_gen_epistasis)

    p = subparsers.add_parser("gen-hillvalley", help="Generate hill/valley series.")
    p.add_argument("--samples", type=int, default=606)
    p.add_argument("--length", type=int, default=100)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="Output CSV file.")
    p.set_defaults(func=_gen_hillvalley)

    p = subparsers.add_parser("evolve", help="Search for a pipeline.")
    p.add_argument("--data", required=True, help="Input CSV file.")
    p.add_argument("--label-col", default="class")
    p.add_argument("--mode", default="standard", choices=["standard", "guided", "pareto", "random"])
    p.add_argument("--pop", type=int, default=50, help="Population size.")
    p.add_argument("--gens", type=int, default=30, help="Number of generations.")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1, help="Evaluation threads.")
    p.add_argument("--budget-millis", type=int, default=20_000, help="Time budget per evaluation.")
    p.add_argument("--out", help="Write the run document to this file.")
    p.set_defaults(func=_evolve)

    p = subparsers.add_parser("baseline-rf", help="Score a random forest on a stratified holdout.")
    p.add_argument("--data", required=True, help="Input CSV file.")
    p.add_argument("--label-col", default="class")
    p.add_argument("--trees", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_baseline_rf)

    p = subparsers.add_parser("bench", help="Run an experiment document.")
    p.add_argument("--spec", required=True, help="Experiment TOML file.")
    p.add_argument("--workers", type=int, help="Concurrent jobs. Overrides the document.")
    p.add_argument("--out", help="Output directory. Overrides the document.")
    p.add_argument("--full-scale", action="store_true", help="Use the 'full' budget preset.")
    p.set_defaults(func=_bench)

    p = subparsers.add_parser("export", help="Export the best pipeline of a run document.")
    p.add_argument("--run", required=True, help="Run document.")
    p.add_argument("--out", required=True, help="Output pipeline document.")
    p.set_defaults(func=_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``pipeline-evolution`` command.

    Returns:
        An exit code.
    """
    try:
        args = make_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(level=args.log_level, format="%(asctime)s %(levelname)s [%(name)s] %(message)s")

    try:
        return int(args.func(args))
    except ConfigurationError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except _DATA_ERRORS as e:
        print(f"Data error: {e}", file=sys.stderr)
        return EXIT_DATA
    except (PipelineEvolutionError, OSError) as e:
        LOGGER.debug("Run failed.", exc_info=True)
        print(f"Run failed: {e}", file=sys.stderr)
        return EXIT_RUN
