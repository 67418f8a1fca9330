"""Logging utilities."""

import typing as _t

import numpy as _np


def cast_unsafe(obj: _t.Any) -> _t.Any:
    """Attempt to cast an arbitrary object to a JSON-safe type.

    Examples:
        >>> import numpy as np
        >>> cast_unsafe(np.float64(0.5)), cast_unsafe([np.int64(1), 2]), cast_unsafe((np.int32(3),))
        (0.5, [1, 2], [3])
    """
    for clazz, formatter in FORMATTERS.items():
        if isinstance(obj, clazz):
            return formatter(obj)
    return obj


FORMATTERS: _t.Dict[_t.Type[_t.Any], _t.Any] = {
    _np.integer: int,
    _np.floating: float,
    _np.bool_: bool,
    _np.ndarray: _np.ndarray.tolist,
    list: lambda x: [cast_unsafe(obj) for obj in x],
    tuple: lambda x: [cast_unsafe(obj) for obj in x],
    dict: lambda x: {str(k): cast_unsafe(v) for k, v in x.items()},
}
"""Formatters used to cast unsafe JSON types."""
