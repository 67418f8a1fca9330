"""Pipelines as strongly typed :mod:`deap` expression trees.

The genetic operators of :mod:`deap.gp` act on prefix-ordered :class:`~deap.gp.PrimitiveTree` instances. Each
operator node of a :class:`.Pipeline` becomes a primitive taking the incoming data and an operator *setting*; the
setting is an ephemeral terminal holding the kind and its parameters. Settings are typed by category, so terminal
replacement keeps the category of an operator. The root is the only primitive returning :class:`Prediction`.
"""

import inspect
import random
import typing as _t
from functools import partial

import numpy as np
from deap import gp

from ..ops import Category, OperatorKind, sample_params
from ._nodes import LEAF, Combine, Model, Node, ParamItems, Pipeline, Transform, make_params


class Features:
    """Type of positions that take a dataset."""


class Prediction:
    """Type of the pipeline output."""


class PreprocessorSetting:
    """Type of preprocessor settings."""


class DecompositionSetting:
    """Type of decomposition settings."""


class SelectorSetting:
    """Type of selector settings."""


class ModelSetting:
    """Type of classifier settings."""


SETTING_TYPES: dict[Category, type] = {
    Category.PREPROCESSOR: PreprocessorSetting,
    Category.DECOMPOSITION: DecompositionSetting,
    Category.SELECTOR: SelectorSetting,
    Category.MODEL: ModelSetting,
}

LEAF_PROBABILITY = 0.3
"""Probability that a dataset position below the drawn height becomes a leaf when trees are grown."""
MAX_GROW_ATTEMPTS = 100
"""Number of grown trees to discard for exceeding the operator cap before falling back to a single model."""


class OperatorSetting(_t.NamedTuple):
    """Value of a setting terminal."""

    kind: OperatorKind
    params: ParamItems


def _sample_setting(category: Category) -> OperatorSetting:
    rng = np.random.default_rng(random.getrandbits(32))
    kinds = OperatorKind.of_category(category)
    kind = kinds[int(rng.integers(len(kinds)))]
    return OperatorSetting(kind, make_params(sample_params(kind, rng)))


def _transform(child: Node, setting: OperatorSetting) -> Transform:
    return Transform(setting.kind, setting.params, child)


def _model(child: Node, setting: OperatorSetting) -> Model:
    return Model(setting.kind, setting.params, child)


def _combine(left: Node, right: Node) -> Combine:
    return Combine(left, right)


def _create_primitive_set() -> gp.PrimitiveSetTyped:
    pset = gp.PrimitiveSetTyped("pipeline", [Features], Prediction)
    pset.renameArguments(ARG0="input")

    pset.addPrimitive(_model, [Features, ModelSetting], Prediction, name="Classify")
    pset.addPrimitive(_model, [Features, ModelSetting], Features, name="Stack")
    pset.addPrimitive(_transform, [Features, PreprocessorSetting], Features, name="Preprocess")
    pset.addPrimitive(_transform, [Features, DecompositionSetting], Features, name="Decompose")
    pset.addPrimitive(_transform, [Features, SelectorSetting], Features, name="Select")
    pset.addPrimitive(_combine, [Features, Features], Features, name="Combine")

    for category, setting_type in SETTING_TYPES.items():
        pset.addEphemeralConstant(setting_type.__name__, partial(_sample_setting, category), setting_type)
    return pset


PSET = _create_primitive_set()
"""The primitive set of all pipelines."""

_INPUT = PSET.mapping["input"]
_ROOT = PSET.mapping["Classify"]
_PRIMITIVES: dict[Category, gp.Primitive] = {
    Category.MODEL: PSET.mapping["Stack"],
    Category.PREPROCESSOR: PSET.mapping["Preprocess"],
    Category.DECOMPOSITION: PSET.mapping["Decompose"],
    Category.SELECTOR: PSET.mapping["Select"],
}


def _setting_terminal(kind: OperatorKind, params: ParamItems) -> gp.Terminal:
    ephemeral = PSET.terminals[SETTING_TYPES[kind.category]][0]
    terminal = ephemeral.__new__(ephemeral)
    terminal.value = OperatorSetting(kind, params)
    return terminal


def _emit(node: Node, out: list[gp.Primitive | gp.Terminal], root: bool = False) -> None:
    if isinstance(node, Combine):
        out.append(PSET.mapping["Combine"])
        _emit(node.left, out)
        _emit(node.right, out)
    elif isinstance(node, Transform | Model):
        out.append(_ROOT if root else _PRIMITIVES[node.kind.category])
        _emit(node.child, out)
        out.append(_setting_terminal(node.kind, node.params))
    else:
        out.append(_INPUT)


def to_tree(p: Pipeline) -> gp.PrimitiveTree:
    """Convert `p` to a typed expression tree. Inverse of :func:`from_tree`.

    Examples:
        >>> from pipeline_evolution.ops import OperatorKind as K
        >>> tree = to_tree(Pipeline(Model(K.KNN, (), Transform(K.StandardScale, (), LEAF))))
        >>> [node.name for node in tree if isinstance(node, gp.Primitive)]
        ['Classify', 'Preprocess']
        >>> tree.height
        2
    """
    out: list[gp.Primitive | gp.Terminal] = []
    _emit(p.root, out, root=True)
    return gp.PrimitiveTree(out)


def from_tree(tree: gp.PrimitiveTree) -> Pipeline:
    """Convert an expression tree over :data:`PSET` to a :class:`.Pipeline`.

    Raises:
        ValueError: If `tree` is not a complete expression.
    """
    stack: list[_t.Any] = []
    for node in reversed(tree):
        if isinstance(node, gp.Primitive):
            if len(stack) < node.arity:
                raise ValueError(f"Not a complete pipeline expression: {tree}")
            args = [stack.pop() for _ in range(node.arity)]
            stack.append(PSET.context[node.name](*args))
        elif node.ret is Features:
            stack.append(LEAF)
        else:
            stack.append(node.value)

    if len(stack) != 1 or not isinstance(stack[0], Model):
        raise ValueError(f"Not a complete pipeline expression: {tree}")
    return Pipeline(stack[0])


def operator_count(tree: gp.PrimitiveTree) -> int:
    """Number of operators in `tree`; equal to :attr:`.Pipeline.size` of its pipeline."""
    return sum(isinstance(node, gp.Primitive) for node in tree)


def within_caps(tree: gp.PrimitiveTree, max_depth: int, max_operators: int) -> bool:
    """``True`` if `tree` respects the depth and operator caps. Trees over :data:`PSET` are always model-rooted."""
    return tree.height <= max_depth and operator_count(tree) <= max_operators


def _grow_condition(height: int, depth: int, type_: type) -> bool:
    if type_ is Prediction:
        return False
    if type_ is not Features:
        return True
    return depth == height or random.random() < LEAF_PROBABILITY


def _generate(min_: int, max_: int) -> list[gp.Primitive | gp.Terminal]:
    # Like gp.generate, but the condition sees the type: settings are always terminals and the root never is.
    expr: list[gp.Primitive | gp.Terminal] = []
    height = random.randint(min_, max_)
    stack: list[tuple[int, type]] = [(0, PSET.ret)]
    while stack:
        depth, type_ = stack.pop()
        if _grow_condition(height, depth, type_):
            term = random.choice(PSET.terminals[type_])
            expr.append(term() if inspect.isclass(term) else term)
        else:
            prim = random.choice(PSET.primitives[type_])
            expr.append(prim)
            stack.extend((depth + 1, arg) for arg in reversed(prim.args))
    return expr


def grow_tree(max_depth: int, max_operators: int) -> gp.PrimitiveTree:
    """Grow a random tree of height ``1..max_depth`` within the operator cap.

    Must be called inside :func:`.seeded_random` for reproducible results. Each dataset position below the root is a
    leaf with probability :data:`LEAF_PROBABILITY`, and a uniformly chosen primitive otherwise, until the drawn height
    forces leaves. Trees exceeding `max_operators` are discarded; after :data:`MAX_GROW_ATTEMPTS` discarded trees, a
    single random model is returned.
    """
    for _ in range(MAX_GROW_ATTEMPTS):
        tree = gp.PrimitiveTree(_generate(1, max_depth))
        if operator_count(tree) <= max_operators:
            return tree

    model = PSET.terminals[ModelSetting][0]()
    return gp.PrimitiveTree([_ROOT, _INPUT, model])
