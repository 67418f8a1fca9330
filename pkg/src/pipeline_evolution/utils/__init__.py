"""Various supporting functions and classes."""

from ._base_metadata import BaseMetadata
from ._deadline import Deadline
from ._load_toml import fingerprint, load_toml_file
from ._seeds import derive_seed, make_rng, seeded_random
from ._tasks import generate_task_id

__all__ = [
    "BaseMetadata",
    "Deadline",
    "derive_seed",
    "fingerprint",
    "generate_task_id",
    "load_toml_file",
    "make_rng",
    "seeded_random",
]
