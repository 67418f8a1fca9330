import random
import threading
import typing as _t
from contextlib import contextmanager

import numpy as np

_GLOBAL_RANDOM_LOCK = threading.RLock()


def derive_seed(*keys: int) -> int:
    """Derive a child seed from a sequence of integer keys.

    Seeds for concurrent work are derived from ``(run seed, generation, index)``-type keys rather than drawn from a
    shared generator, so results do not depend on scheduling.

    Args:
        *keys: Non-negative integers, e.g. a run seed followed by generation and index.

    Returns:
        A seed in ``[0, 2**32)``.

    Examples:
        >>> derive_seed(2016, 0, 1) == derive_seed(2016, 0, 1)
        True
        >>> derive_seed(2016, 0, 1) == derive_seed(2016, 1, 0)
        False
    """
    if not keys:
        raise ValueError("At least one key is required.")
    if any(k < 0 for k in keys):
        raise ValueError(f"Keys must be non-negative, but got {keys=}.")
    return int(np.random.SeedSequence(list(keys)).generate_state(1)[0])


def make_rng(seed: int | np.random.Generator) -> np.random.Generator:
    """Create a generator from `seed`. Generators are returned as-is."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@contextmanager
def seeded_random(rng: np.random.Generator) -> _t.Iterator[None]:
    """Seed the global :mod:`random` module from `rng` for the duration of a block.

    The genetic operators of :mod:`deap` draw from the global :mod:`random` module. Inside the block, those draws are
    a function of `rng` only. Blocks are mutually exclusive across threads, and the previous global state is restored
    on exit.

    Examples:
        >>> import random
        >>> with seeded_random(np.random.default_rng(5)):
        ...     a = random.random()
        >>> with seeded_random(np.random.default_rng(5)):
        ...     b = random.random()
        >>> a == b
        True
    """
    seed = int(rng.integers(2**63))
    with _GLOBAL_RANDOM_LOCK:
        state = random.getstate()
        random.seed(seed)
        try:
            yield
        finally:
            random.setstate(state)
