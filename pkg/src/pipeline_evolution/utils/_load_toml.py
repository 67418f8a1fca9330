import json
import typing as _t
from collections.abc import Mapping
from hashlib import sha256
from pathlib import Path

import tomllib
from rics.misc import interpolate_environment_variables

from .._compat import PathLikeType


def load_toml_file(path: PathLikeType, *, allow_interpolation: bool = False) -> dict[str, _t.Any]:
    """Read an experiment document.

    With `allow_interpolation`, ``${VAR}`` and ``${VAR:default}`` references are replaced before parsing. Nested
    references and blank values are not allowed. See :func:`rics.misc.interpolate_environment_variables`.

    Args:
        path: Path to a UTF-8 encoded TOML file.
        allow_interpolation: If ``True``, substitute environment variables.

    Returns:
        The parsed document.
    """
    text = Path(path).read_text(encoding="utf-8")
    if allow_interpolation:
        text = interpolate_environment_variables(text, allow_nested=False, allow_blank=False)
    return tomllib.loads(text)


def fingerprint(config: Mapping[str, _t.Any]) -> str:
    """Hex SHA-256 digest of a parsed document.

    Examples:
        Key order does not matter.

        >>> fingerprint({"a": 1, "b": [2, 3]}) == fingerprint({"b": [2, 3], "a": 1})
        True
        >>> len(fingerprint({}))
        64
    """
    # TOML dates and times are hashed by their string form.
    text = json.dumps(config, sort_keys=True, default=str)
    return sha256(text.encode()).hexdigest()
