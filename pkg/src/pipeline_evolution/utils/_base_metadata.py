import json
import typing as _t
from abc import ABC, abstractmethod
from datetime import datetime
from pathlib import Path


def _initialize_versions() -> dict[str, str]:
    from deap import __version__ as deap
    from numpy import __version__ as numpy
    from pandas import __version__ as pandas
    from rics import __version__ as rics

    from .. import __version__ as pipeline_evolution

    return dict(pipeline_evolution=pipeline_evolution, numpy=numpy, pandas=pandas, rics=rics, deap=deap)


class BaseMetadata(ABC):
    """Base class for JSON sidecar documents.

    Documents have the layout ``{"format": ..., "versions": ..., "created": ..., "payload": ...}``. Subclasses
    define the format tag and convert their own attributes to and from the payload.

    Args:
        versions: Top-level dependency versions. Default is the currently installed versions.
        created: The time at which the metadata was originally created. Default is now.
    """

    FORMAT: _t.ClassVar[str]
    """Value of the ``format`` key. Documents with another tag are rejected by :meth:`from_json`."""

    def __init__(self, versions: dict[str, str] | None = None, created: datetime | None = None) -> None:
        self.versions = versions or _initialize_versions()
        self.created = created or datetime.now()

    @abstractmethod
    def _to_payload(self) -> dict[str, _t.Any]:
        """Subclass attributes as JSON types."""

    @classmethod
    @abstractmethod
    def _from_payload(cls, payload: dict[str, _t.Any]) -> dict[str, _t.Any]:
        """Constructor keyword arguments of the subclass."""

    def to_json(self) -> str:
        """Get a JSON representation of this metadata."""
        doc = dict(
            format=self.FORMAT,
            versions=self.versions,
            created=self.created.isoformat(),
            payload=self._to_payload(),
        )
        return json.dumps(doc, indent=4)

    @classmethod
    def from_json(cls, s: str) -> _t.Self:
        """Create metadata from a JSON string `s`.

        Raises:
            ValueError: If `s` is not a document of this type.
        """
        doc = json.loads(s)
        if not isinstance(doc, dict) or doc.get("format") != cls.FORMAT:
            actual = doc.get("format") if isinstance(doc, dict) else type(doc).__name__
            raise ValueError(f"Expected a {cls.FORMAT!r}-document, got format={actual!r}.")

        return cls(
            versions=doc["versions"],
            created=datetime.fromisoformat(doc["created"]),
            **cls._from_payload(doc["payload"]),
        )

    def write(self, path: Path) -> None:
        """Write metadata to `path`."""
        path.write_text(self.to_json() + "\n", encoding="utf-8")

    @classmethod
    def read(cls, path: Path) -> _t.Self:
        """Read metadata from `path`."""
        return cls.from_json(path.read_text(encoding="utf-8"))
