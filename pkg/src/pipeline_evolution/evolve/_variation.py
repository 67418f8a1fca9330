"""Mutation and crossover of pipeline trees. Every offspring is Model-rooted and respects the caps."""

import logging
import random
import typing as _t

from deap import gp

from .. import types as _tt
from ..pipeline import DEFAULT_MAX_DEPTH, DEFAULT_MAX_OPERATORS, PSET, Pipeline, from_tree, to_tree, within_caps
from ..utils import seeded_random

LOGGER = logging.getLogger(__package__).getChild("variation")

MUTATIONS = ("point", "insert", "shrink")
"""Mutation variants, drawn with equal probability."""

_Mutator = _t.Callable[[gp.PrimitiveTree], tuple[gp.PrimitiveTree]]


def _point(tree: gp.PrimitiveTree) -> tuple[gp.PrimitiveTree]:
    # Every operator holds exactly one setting; a new setting keeps the category and resamples the parameters.
    return gp.mutEphemeral(tree, mode="one")  # type: ignore[no-any-return]


def _insert(tree: gp.PrimitiveTree) -> tuple[gp.PrimitiveTree]:
    return gp.mutInsert(tree, pset=PSET)  # type: ignore[no-any-return]


def _shrink(tree: gp.PrimitiveTree) -> tuple[gp.PrimitiveTree]:
    return gp.mutShrink(tree)  # type: ignore[no-any-return]


_MUTATORS: dict[str, _Mutator] = {"point": _point, "insert": _insert, "shrink": _shrink}


def mutate(
    p: Pipeline,
    rng: _tt.Rng,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_operators: int = DEFAULT_MAX_OPERATORS,
) -> Pipeline:
    """Apply a random point, insert or shrink mutation.

    * ``point``: new kind (same category) and parameters for one operator (:func:`deap.gp.mutEphemeral`).
    * ``insert``: a new primitive above a random non-root subtree (:func:`deap.gp.mutInsert`). Other inputs of the new
      primitive are leaves, so ``Combine`` insertions pair the subtree with a copy of the input.
    * ``shrink``: splice out a non-root operator, promoting one of its inputs (:func:`deap.gp.mutShrink`).

    When the drawn variant leaves the pipeline unchanged, or its result would exceed a cap, point mutation is used
    instead.

    Args:
        p: A valid pipeline.
        rng: Source of randomness.
        max_depth: Depth cap.
        max_operators: Operator count cap.

    Returns:
        A valid pipeline.
    """
    with seeded_random(rng):
        variant = random.choice(MUTATIONS)
        (tree,) = _MUTATORS[variant](to_tree(p))
        if variant != "point" and within_caps(tree, max_depth, max_operators):
            child = from_tree(tree)
            if child != p:
                return child

        (tree,) = _point(to_tree(p))
    return from_tree(tree)


def crossover(
    a: Pipeline,
    b: Pipeline,
    rng: _tt.Rng,
    max_depth: int = DEFAULT_MAX_DEPTH,
    max_operators: int = DEFAULT_MAX_OPERATORS,
) -> Pipeline:
    """One-point subtree crossover; the child is `a` with one subtree replaced by a subtree of `b`.

    Exchange points are drawn by :func:`deap.gp.cxOnePoint`: a random type shared by the non-root nodes of both
    parents, then a random node of that type in each. Dataset-typed subtrees replace dataset-typed subtrees, and
    operator settings replace settings of the same category (the setting of the root model included).

    Args:
        a: Receiving parent.
        b: Donating parent.
        rng: Source of randomness.
        max_depth: Depth cap.
        max_operators: Operator count cap.

    Returns:
        A valid pipeline; `a` itself if the child would exceed a cap.
    """
    with seeded_random(rng):
        child, _ = gp.cxOnePoint(to_tree(a), to_tree(b))

    if within_caps(child, max_depth, max_operators):
        return from_tree(child)

    LOGGER.debug(f"Crossover of {a} and {b} exceeds the caps ({max_depth=}, {max_operators=}).")
    return a
