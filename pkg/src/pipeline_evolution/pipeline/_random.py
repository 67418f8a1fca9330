from .. import types as _tt
from ..utils import seeded_random
from ._genome import from_tree, grow_tree
from ._nodes import Pipeline
from ._validate import DEFAULT_MAX_OPERATORS


def random_pipeline(rng: _tt.Rng, max_depth: int, max_operators: int = DEFAULT_MAX_OPERATORS) -> Pipeline:
    """Grow a random pipeline.

    The root is always a model. Below it, each position becomes a leaf or a uniformly chosen operator primitive (see
    :func:`.grow_tree`) until a randomly drawn height in ``1..max_depth`` forces leaves. All parameters are sampled
    from the operator schemas.

    Args:
        rng: Source of randomness.
        max_depth: Depth cap, at least 1.
        max_operators: Operator count cap, at least 1.

    Returns:
        A valid :class:`Pipeline`.

    Raises:
        ValueError: If `max_depth` or `max_operators` is less than 1.

    Examples:
        >>> import numpy as np
        >>> p = random_pipeline(np.random.default_rng(2016), max_depth=1)
        >>> p.size, p.depth
        (1, 1)
    """
    if max_depth < 1:
        raise ValueError(f"Bad {max_depth=}; must be at least 1.")
    if max_operators < 1:
        raise ValueError(f"Bad {max_operators=}; must be at least 1.")

    with seeded_random(rng):
        tree = grow_tree(max_depth, max_operators)
    return from_tree(tree)
