import json
import logging
from pathlib import Path

from .._compat import PathLikeType
from ..evolve import RunResult
from ..pipeline import Pipeline, render, serialize
from .exceptions import ExportError

LOGGER = logging.getLogger(__package__).getChild("export")


def export_pipeline(run: RunResult, path: PathLikeType) -> tuple[Path, Path]:
    """Write the best pipeline of `run`.

    The pipeline document is written to `path`, and a one-line rendering to the same path with suffix ``.txt``.

    Args:
        run: A search result.
        path: Output file. Parent directories are created.

    Returns:
        Paths of the document and the rendering.

    Raises:
        ExportError: If `run` has no successful individual, or writing fails. Nothing is written in the first case.
    """
    best = run.best
    if best is None or best.failed:
        raise ExportError(
            f"Cannot export a run without a successful pipeline: {run.total_evaluations} evaluations, all failed."
        )
    return write_pipeline(best.pipeline, path)


def write_pipeline(p: Pipeline, path: PathLikeType) -> tuple[Path, Path]:
    """Write `p` as a document and as a rendering. See :func:`export_pipeline`."""
    path = Path(path)
    text_path = path.with_suffix(".txt")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(serialize(p) + "\n", encoding="utf-8")
        text_path.write_text(render(p) + "\n", encoding="utf-8")
    except OSError as e:
        raise ExportError(f"Cannot write '{path}': {e}") from e

    LOGGER.debug(f"Exported {p} to '{path}'.")
    return path, text_path


def read_run(path: PathLikeType) -> RunResult:
    """Read a run document written by :meth:`.RunResult.to_document`.

    Raises:
        ExportError: If the file cannot be read or is not a run document.
    """
    path = Path(path)
    try:
        return RunResult.from_document(json.loads(path.read_text(encoding="utf-8")))
    except (OSError, ValueError, KeyError, TypeError) as e:
        raise ExportError(f"Cannot read run document '{path}': {e}") from e
