import typing as _t

from ..ops import OperatorKind, validate_params
from ._nodes import Combine, Leaf, Model, Path, Pipeline

DEFAULT_MAX_DEPTH = 10
"""Default depth cap."""
DEFAULT_MAX_OPERATORS = 20
"""Default operator count cap."""

ViolationKind = _t.Literal["root-not-model", "category", "schema", "depth", "size", "structure"]


class Violation(_t.NamedTuple):
    """A single validation problem."""

    kind: ViolationKind
    """Type of problem."""
    path: Path
    """Location of the offending node; ``()`` for the root or for tree-wide problems."""
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] at {list(self.path)}: {self.message}"


def validate(
    p: Pipeline,
    max_depth: int | None = DEFAULT_MAX_DEPTH,
    max_operators: int | None = DEFAULT_MAX_OPERATORS,
) -> list[Violation]:
    """Check the structural rules of a pipeline.

    Rules: the root is a ``Model``; ``Transform`` nodes hold non-model kinds and ``Model`` nodes hold model kinds;
    every parameter vector validates against its schema; depth and size stay within the caps.

    Args:
        p: A pipeline.
        max_depth: Depth cap. ``None`` disables the check.
        max_operators: Operator count cap. ``None`` disables the check.

    Returns:
        A list of violations; empty if `p` is valid.

    Examples:
        >>> from pipeline_evolution.ops import OperatorKind as K
        >>> from pipeline_evolution.pipeline import LEAF, Transform
        >>> validate(Pipeline(Model(K.KNN, (), LEAF)))
        []
        >>> [v.kind for v in validate(Pipeline(Transform(K.StandardScale, (), LEAF)))]
        ['root-not-model']
    """
    violations = []
    if not isinstance(p.root, Model):
        violations.append(Violation("root-not-model", (), f"Root must be a Model, but got {type(p.root).__name__}."))

    for path, node in p.nodes():
        if isinstance(node, Leaf | Combine):
            continue

        if not isinstance(node.kind, OperatorKind):
            violations.append(Violation("structure", path, f"Bad operator kind {node.kind!r}."))
            continue
        if isinstance(node, Model) != node.kind.is_model:
            expected = "a model" if isinstance(node, Model) else "a non-model"
            message = f"{type(node).__name__} node requires {expected} kind, got {node.kind.value}."
            violations.append(Violation("category", path, message))
        problems = validate_params(node.kind, dict(node.params))
        if problems:
            violations.append(Violation("schema", path, f"{node.kind.value}: " + "; ".join(problems)))

    if max_depth is not None and p.depth > max_depth:
        violations.append(Violation("depth", (), f"Depth {p.depth} exceeds {max_depth=}."))
    if max_operators is not None and p.size > max_operators:
        violations.append(Violation("size", (), f"Size {p.size} exceeds {max_operators=}."))
    return violations
