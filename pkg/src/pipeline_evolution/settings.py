"""Global settings."""

import logging as _l
import typing as _t


class KeyEventLogLevel(_t.NamedTuple):
    """Enter/exit log level pair for key events. Default level is 10 ``logging.DEBUG=10``."""

    enter: int = _l.DEBUG
    """Log level for the ``ENTER`` message, e.g. ``EVOLVER.RUN.ENTER``.

    .. code-block:: python
       :caption: Example: Enter message of :func:`.evolve_run`.

       Begin Standard-mode evolution of 50 pipelines for 30 generations on
         Dataset(n=600, m=100, classes=2) using seed=2016.
    """

    exit: int = _l.DEBUG
    """Log level for the ``EXIT`` message, e.g. ``EVOLVER.RUN.EXIT``.

    .. code-block:: python
       :caption: Example: Exit message of :func:`.evolve_run`.

       Finished Standard-mode evolution in 4m 12s after 1377 evaluations. Best
         pipeline (balanced_accuracy=0.8125, size=3): KNN(StandardScale(Leaf),
         n_neighbors=7).
    """


class logging:  # noqa: N801
    """Global logging settings used by all instances."""

    EVOLVE_RUN: KeyEventLogLevel = KeyEventLogLevel(exit=_l.INFO)
    """Levels for ``EVOLVER.RUN`` key event messages (guided and Pareto runs)."""
    RANDOM_SEARCH_RUN: KeyEventLogLevel = KeyEventLogLevel(exit=_l.INFO)
    """Levels for ``EVOLVER.RANDOM_SEARCH`` key event messages."""
    GENERATION: KeyEventLogLevel = KeyEventLogLevel()
    """Levels for ``EVOLVER.GENERATION`` key event messages."""
    EVALUATE: KeyEventLogLevel = KeyEventLogLevel()
    """Levels for ``PIPELINE.EVALUATE`` key event messages."""

    EXPERIMENT: KeyEventLogLevel = KeyEventLogLevel(exit=_l.INFO)
    """Levels for ``EXPERIMENT.RUN`` key event messages."""
    REPLICATE: KeyEventLogLevel = KeyEventLogLevel(exit=_l.INFO)
    """Levels for ``EXPERIMENT.REPLICATE`` key event messages."""

    def __init__(self) -> None:
        _raise_info_message(self)


def _raise_info_message(obj: _t.Any) -> None:
    from rics.misc import get_public_module, tname

    raise RuntimeError(
        f"Class '{get_public_module(obj)}.{tname(obj)}' is used as a public"
        f" namespace. There is no need to instantiate this class."
    )
