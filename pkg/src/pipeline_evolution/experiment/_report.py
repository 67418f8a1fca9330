import dataclasses
import json
import math
import typing as _t
from collections.abc import Sequence

import numpy as np
import pandas as pd

REPORT_FORMAT = "tpot-report/1"
"""Format tag of report documents."""
NOTCH_FACTOR = 1.57


def notch_interval(values: Sequence[float]) -> tuple[float, float]:
    """Approximate 95% confidence interval of the median: ``median -/+ 1.57 * IQR / sqrt(n)``.

    Examples:
        >>> notch_interval([0.5, 0.6, 0.7, 0.8])
        (0.53225, 0.76775)
    """
    if not len(values):
        return math.nan, math.nan
    arr = np.asarray(values, dtype=np.float64)
    median = float(np.median(arr))
    q1, q3 = np.percentile(arr, [25, 75])
    half_width = NOTCH_FACTOR * float(q3 - q1) / math.sqrt(len(arr))
    return round(median - half_width, 12), round(median + half_width, 12)


@dataclasses.dataclass(frozen=True)
class ReplicateRecord:
    """Outcome of one arm on one replicate."""

    arm: str
    replicate: int
    seed: int
    """Seed of the replicate."""
    accuracy: float | None
    """Balanced accuracy on the outer holdout; ``None`` on failure."""
    size: int | None
    """Operator count of the representative pipeline."""
    internal_accuracy: float | None = None
    """Fitness of the representative pipeline during the search."""
    evaluations: int = 0
    """Number of pipelines evaluated by the search."""
    pipeline: str | None = None
    """One-line rendering of the representative pipeline."""
    error: str | None = None
    """Failure message."""

    @property
    def failed(self) -> bool:
        """``True`` if the arm failed on this replicate."""
        return self.error is not None

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict."""
        return dataclasses.asdict(self)


@dataclasses.dataclass(frozen=True)
class ArmSummary:
    """Summary of one arm over all replicates."""

    arm: str
    n: int
    """Number of successful replicates."""
    median_accuracy: float
    ci_low: float
    ci_high: float
    mean_size: float
    median_size: float
    failures: int

    @classmethod
    def from_records(cls, arm: str, records: Sequence[ReplicateRecord]) -> "ArmSummary":
        """Summarize the `records` of `arm`."""
        ok = [r for r in records if r.arm == arm and not r.failed]
        accuracies = [_t.cast(float, r.accuracy) for r in ok]
        sizes = [_t.cast(int, r.size) for r in ok]
        low, high = notch_interval(accuracies)
        return cls(
            arm=arm,
            n=len(ok),
            median_accuracy=float(np.median(accuracies)) if ok else math.nan,
            ci_low=low,
            ci_high=high,
            mean_size=float(np.mean(sizes)) if ok else math.nan,
            median_size=float(np.median(sizes)) if ok else math.nan,
            failures=sum(r.arm == arm and r.failed for r in records),
        )

    def to_dict(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible dict. Missing values become ``None``."""
        return {k: None if isinstance(v, float) and math.isnan(v) else v for k, v in dataclasses.asdict(self).items()}


@dataclasses.dataclass(frozen=True)
class ExperimentReport:
    """Outcome of :func:`.run_experiment`."""

    name: str
    seed: int
    arms: tuple[str, ...]
    replicates: int
    records: tuple[ReplicateRecord, ...]
    """Sorted by arm order, then replicate."""
    summaries: tuple[ArmSummary, ...]
    source: dict[str, _t.Any]
    """Description of the data source."""
    gp: dict[str, _t.Any]
    """Search settings, before per-arm and per-replicate changes."""
    class_names: tuple[str, ...] | None = None
    """Original label values of the data, if labels were strings."""
    fingerprint: str | None = None
    notes: tuple[str, ...] = ()
    wall_seconds: float = 0.0
    job_seconds: dict[str, float] = dataclasses.field(default_factory=dict)
    """Wall time per ``<arm>-r<replicate>`` job."""

    def summary(self, arm: str) -> ArmSummary:
        """Get the summary of `arm`."""
        for s in self.summaries:
            if s.arm == arm:
                return s
        raise KeyError(arm)

    def accuracies(self, arm: str) -> list[float]:
        """Holdout accuracies of the successful replicates of `arm`."""
        return [_t.cast(float, r.accuracy) for r in self.records if r.arm == arm and not r.failed]

    def body(self) -> dict[str, _t.Any]:
        """Reproducible part of the report. Contains no timings."""
        return {
            "name": self.name,
            "seed": self.seed,
            "arms": list(self.arms),
            "replicates": self.replicates,
            "fingerprint": self.fingerprint,
            "source": self.source,
            "gp": self.gp,
            "class_names": None if self.class_names is None else list(self.class_names),
            "summaries": [s.to_dict() for s in self.summaries],
            "records": [r.to_dict() for r in self.records],
            "notes": list(self.notes),
        }

    def to_document(self) -> dict[str, _t.Any]:
        """Get a JSON-compatible report document."""
        return {
            "format": REPORT_FORMAT,
            "body": self.body(),
            "timing": {"wall_seconds": self.wall_seconds, "jobs": dict(sorted(self.job_seconds.items()))},
        }

    def to_json(self) -> str:
        """Serialize :meth:`to_document`."""
        return json.dumps(self.to_document(), indent=2, sort_keys=True)

    def to_frame(self) -> pd.DataFrame:
        """Per-replicate records as a frame with columns `arm`, `replicate`, `accuracy` and `size`."""
        rows = [(r.arm, r.replicate, r.accuracy, r.size) for r in self.records if not r.failed]
        return pd.DataFrame(rows, columns=["arm", "replicate", "accuracy", "size"])
