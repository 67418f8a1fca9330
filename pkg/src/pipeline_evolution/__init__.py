"""Evolution of tree-shaped machine learning pipelines.

Pipelines are trees of operators (preprocessors, decompositions, feature selectors and classifiers) that are evolved
by genetic programming, optionally under Pareto selection on accuracy and pipeline size. See :func:`.evolve_run` for
the search itself, and :func:`.run_experiment` for the benchmark harness.
"""

import logging as _logging

__all__ = [
    "__version__",  # Make MyPy happy
]

__version__ = "0.1.0.dev1"

_logging.getLogger(__name__).addHandler(_logging.NullHandler())
