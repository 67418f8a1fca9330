import dataclasses
import typing as _t
from collections.abc import Iterator

from .. import types as _tt
from ..ops import OperatorKind

ParamItems = tuple[tuple[str, _tt.ParamValue], ...]
"""Parameters as sorted ``(name, value)`` pairs."""
Path = tuple[int, ...]
"""Child positions from the root to a node. The root has path ``()``."""


def make_params(params: _tt.Params | ParamItems | None = None) -> ParamItems:
    """Convert parameters to sorted ``(name, value)`` pairs."""
    if not params:
        return ()
    items = params.items() if isinstance(params, _t.Mapping) else params
    return tuple(sorted((str(k), v) for k, v in items))


@dataclasses.dataclass(frozen=True)
class Leaf:
    """A copy of the input dataset."""

    @property
    def children(self) -> tuple["Node", ...]:
        """Child nodes."""
        return ()


@dataclasses.dataclass(frozen=True)
class Transform:
    """A preprocessor, decomposition or selector applied to the output of `child`."""

    kind: OperatorKind
    params: ParamItems
    child: "Node"

    @property
    def children(self) -> tuple["Node", ...]:
        """Child nodes."""
        return (self.child,)

    @property
    def param_dict(self) -> dict[str, _tt.ParamValue]:
        """Parameters as a dict."""
        return dict(self.params)


@dataclasses.dataclass(frozen=True)
class Combine:
    """Feature union of two branches."""

    left: "Node"
    right: "Node"

    @property
    def children(self) -> tuple["Node", ...]:
        """Child nodes."""
        return self.left, self.right


@dataclasses.dataclass(frozen=True)
class Model:
    """A classifier trained on the output of `child`. Writes the guess column."""

    kind: OperatorKind
    params: ParamItems
    child: "Node"

    @property
    def children(self) -> tuple["Node", ...]:
        """Child nodes."""
        return (self.child,)

    @property
    def param_dict(self) -> dict[str, _tt.ParamValue]:
        """Parameters as a dict."""
        return dict(self.params)


Node = Leaf | Transform | Combine | Model
"""Any pipeline node."""

LEAF = Leaf()


def with_children(node: Node, children: tuple[Node, ...]) -> Node:
    """Copy of `node` with replaced children."""
    if isinstance(node, Leaf):
        return node
    if isinstance(node, Combine):
        return Combine(*children)
    return dataclasses.replace(node, child=children[0])


def iter_nodes(node: Node, path: Path = ()) -> Iterator[tuple[Path, Node]]:
    """Yield ``(path, node)`` pairs in pre-order."""
    yield path, node
    for i, child in enumerate(node.children):
        yield from iter_nodes(child, (*path, i))


def get_node(root: Node, path: Path) -> Node:
    """Get the node at `path`.

    Raises:
        KeyError: If there is no node at `path`.
    """
    node = root
    for i in path:
        children = node.children
        if not 0 <= i < len(children):
            raise KeyError(path)
        node = children[i]
    return node


def replace_node(root: Node, path: Path, replacement: Node) -> Node:
    """Replace the node at `path`, returning a new tree."""
    if not path:
        return replacement
    i, *rest = path
    children = list(root.children)
    if not 0 <= i < len(children):
        raise KeyError(path)
    children[i] = replace_node(children[i], tuple(rest), replacement)
    return with_children(root, tuple(children))


def node_size(node: Node) -> int:
    """Number of non-leaf nodes."""
    return sum(not isinstance(n, Leaf) for _, n in iter_nodes(node))


def node_depth(node: Node) -> int:
    """Longest root-to-leaf edge count. A ``Leaf`` has depth 0."""
    children = node.children
    return 1 + max(node_depth(c) for c in children) if children else 0


@dataclasses.dataclass(frozen=True)
class Pipeline:
    """A tree of operators. Data flows from the leaves to the root.

    Examples:
        >>> from pipeline_evolution.ops import OperatorKind as K
        >>> p = Pipeline(Model(K.KNN, make_params({"n_neighbors": 3}), Transform(K.StandardScale, (), LEAF)))
        >>> p.size, p.depth
        (2, 2)
    """

    root: Node

    @property
    def size(self) -> int:
        """Operator count: all non-leaf nodes, ``Combine`` included."""
        return node_size(self.root)

    @property
    def depth(self) -> int:
        """Depth of the tree. ``Model(Leaf)`` has depth 1."""
        return node_depth(self.root)

    def nodes(self) -> Iterator[tuple[Path, Node]]:
        """Yield ``(path, node)`` pairs in pre-order."""
        return iter_nodes(self.root)

    def get(self, path: Path) -> Node:
        """Get the node at `path`."""
        return get_node(self.root, path)

    def replace(self, path: Path, replacement: Node) -> "Pipeline":
        """Replace the node at `path`."""
        return Pipeline(replace_node(self.root, path, replacement))

    def __str__(self) -> str:
        from ._serialize import render

        return render(self)
