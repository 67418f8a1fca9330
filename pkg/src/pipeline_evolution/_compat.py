"""Shared aliases and formatters."""

from os import PathLike
from pathlib import Path
from typing import TypeAlias

PathLikeType: TypeAlias = str | PathLike[str] | Path

try:
    from rics.strings import format_perf_counter as fmt_perf
    from rics.strings import format_seconds as fmt_sec
except ImportError:  # pragma: no cover
    # Older rics releases.
    from rics.performance import format_perf_counter as fmt_perf
    from rics.performance import format_seconds as fmt_sec

__all__ = ["PathLikeType", "fmt_perf", "fmt_sec"]
