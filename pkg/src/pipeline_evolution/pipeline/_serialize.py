import json
import typing as _t

from .. import types as _tt
from ..ops import OperatorKind
from ._nodes import LEAF, Combine, Leaf, Model, Node, Pipeline, Transform, make_params
from .exceptions import PipelineParseError

FORMAT = "tpot-tree/1"
"""Format tag of pipeline documents."""

_ARITY = {"Leaf": 0, "Combine": 2}


def node_to_dict(node: Node) -> dict[str, _t.Any]:
    """Convert a node to an ``{op, params, children}`` dict."""
    if isinstance(node, Leaf):
        op, params = "Leaf", {}
    elif isinstance(node, Combine):
        op, params = "Combine", {}
    else:
        op, params = node.kind.value, dict(node.params)
    return {"op": op, "params": params, "children": [node_to_dict(c) for c in node.children]}


def to_document(p: Pipeline) -> dict[str, _t.Any]:
    """Get a pipeline document: ``{"format": "tpot-tree/1", "root": {...}}``."""
    return {"format": FORMAT, "root": node_to_dict(p.root)}


def serialize(p: Pipeline) -> str:
    """Serialize a pipeline to JSON, with stable key order.

    Examples:
        >>> from pipeline_evolution.ops import OperatorKind as K
        >>> print(serialize(Pipeline(Model(K.KNN, make_params({"n_neighbors": 3}), LEAF))))
        {
          "format": "tpot-tree/1",
          "root": {
            "children": [
              {
                "children": [],
                "op": "Leaf",
                "params": {}
              }
            ],
            "op": "KNN",
            "params": {
              "n_neighbors": 3
            }
          }
        }
    """
    return json.dumps(to_document(p), indent=2, sort_keys=True)


def _check_value(value: _t.Any, location: str) -> _tt.ParamValue:
    if value is None or isinstance(value, str):
        return value
    if isinstance(value, bool) or not isinstance(value, int | float):
        raise PipelineParseError(f"Parameter value {value!r} is not a number, string or null", location)
    return value


def node_from_dict(obj: _t.Any, location: str = "$") -> Node:
    """Inverse of :func:`node_to_dict`.

    Raises:
        PipelineParseError: If `obj` is malformed. The error names the location in JSONPath-like notation.
    """
    if not isinstance(obj, dict):
        raise PipelineParseError(f"Expected an object, but got {type(obj).__name__}", location)
    unknown = set(obj).difference({"op", "params", "children"})
    if unknown:
        raise PipelineParseError(f"Unknown keys {sorted(unknown)}", location)

    op = obj.get("op")
    if not isinstance(op, str):
        raise PipelineParseError("Missing or non-string 'op'", location)

    params = obj.get("params", {})
    if not isinstance(params, dict):
        raise PipelineParseError("'params' must be an object", f"{location}.params")
    checked = {k: _check_value(v, f"{location}.params.{k}") for k, v in params.items()}

    children = obj.get("children", [])
    if not isinstance(children, list):
        raise PipelineParseError("'children' must be a list", f"{location}.children")

    if op in _ARITY:
        arity = _ARITY[op]
        kind = None
    else:
        try:
            kind = OperatorKind(op)
        except ValueError:
            raise PipelineParseError(f"Unknown operator {op!r}", f"{location}.op") from None
        arity = 1

    if len(children) != arity:
        raise PipelineParseError(f"{op} takes {arity} children, but got {len(children)}", f"{location}.children")
    if kind is None and checked:
        raise PipelineParseError(f"{op} takes no parameters", f"{location}.params")

    nodes = [node_from_dict(c, f"{location}.children[{i}]") for i, c in enumerate(children)]
    if op == "Leaf":
        return LEAF
    if op == "Combine":
        return Combine(nodes[0], nodes[1])
    assert kind is not None  # noqa: S101
    cls = Model if kind.is_model else Transform
    return cls(kind, make_params(checked), nodes[0])


def from_document(doc: _t.Any) -> Pipeline:
    """Inverse of :func:`to_document`."""
    if not isinstance(doc, dict):
        raise PipelineParseError("Expected a pipeline document object", "$")
    if doc.get("format") != FORMAT:
        raise PipelineParseError(f"Expected format={FORMAT!r}, but got {doc.get('format')!r}", "$.format")
    if "root" not in doc:
        raise PipelineParseError("Missing 'root'", "$")
    return Pipeline(node_from_dict(doc["root"], "$.root"))


def deserialize(text: str) -> Pipeline:
    """Parse a document created by :func:`serialize`.

    Raises:
        PipelineParseError: If `text` is malformed. The error names a line and column, or a location in the tree.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PipelineParseError(e.msg, f"line {e.lineno}, column {e.colno}") from e
    return from_document(doc)


def _format_value(value: _tt.ParamValue) -> str:
    if isinstance(value, float):
        return f"{value:.4g}"
    return str(value)


def _render(node: Node) -> str:
    if isinstance(node, Leaf):
        return "Leaf"
    if isinstance(node, Combine):
        return f"Combine({_render(node.left)}, {_render(node.right)})"
    args = [_render(node.child), *(f"{k}={_format_value(v)}" for k, v in node.params)]
    return f"{node.kind.value}({', '.join(args)})"


def render(p: Pipeline) -> str:
    """One-line human-readable rendering.

    Examples:
        >>> from pipeline_evolution.ops import OperatorKind as K
        >>> render(Pipeline(Model(K.KNN, make_params({"n_neighbors": 3}), LEAF)))
        'KNN(Leaf, n_neighbors=3)'
    """
    return _render(p.root)
