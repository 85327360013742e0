"""Parsing, validation, and normalization of raw trajectory records.

Input is header-bearing delimited text (comma by default). Columns are
mapped by name, so AIS exports, telemetry dumps, and sports feeds all go
through the same path. Each distinct id becomes one trajectory; rows are
sorted by time and exact duplicate (id, t) rows collapse to the first
occurrence seen.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, NamedTuple

import numpy as np

GEOGRAPHIC = "geographic"
PLANAR = "planar"

DEFAULT_SCHEMA = {"id": "id", "t": "t", "x": "x", "y": "y"}
DEFAULT_MIN_FIXES = 10

_TIME_FORMATS = ("%Y-%m-%d %H:%M:%S", "%Y-%m-%dT%H:%M:%S",
                 "%Y-%m-%d %H:%M:%S.%f", "%Y-%m-%dT%H:%M:%S.%f")


class IngestError(Exception):
    """Hard ingest failure (bad schema, unreadable input)."""


class Fix(NamedTuple):
    t: float
    x: float
    y: float


@dataclass(frozen=True)
class Trajectory:
    """One moving object: parallel time/coordinate arrays, sorted by time.

    ``x``/``y`` are degrees longitude/latitude in geographic mode, meters
    east/north in planar mode.
    """

    id: str
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    mode: str = PLANAR

    def __post_init__(self):
        for name in ("t", "x", "y"):
            arr = np.ascontiguousarray(getattr(self, name), dtype=np.float64)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def n(self) -> int:
        return self.t.shape[0]

    @property
    def fixes(self) -> list[Fix]:
        return [Fix(float(t), float(x), float(y))
                for t, x, y in zip(self.t, self.x, self.y)]

    @classmethod
    def from_fixes(cls, traj_id: str, fixes: Iterable[Fix | tuple], mode: str = PLANAR) -> "Trajectory":
        rows = [(float(f[0]), float(f[1]), float(f[2])) for f in fixes]
        t = np.array([r[0] for r in rows])
        x = np.array([r[1] for r in rows])
        y = np.array([r[2] for r in rows])
        return cls(traj_id, t, x, y, mode)


class Violation(NamedTuple):
    invariant: str
    index: int


@dataclass
class IngestReport:
    admitted: int = 0
    rejected: list[tuple[str, str]] = field(default_factory=list)
    duplicates_dropped: int = 0
    malformed_rows: int = 0


def parse_timestamp(text: str) -> float:
    """Numeric seconds, or a calendar string (UTC) normalized to seconds."""
    try:
        return float(text)
    except ValueError:
        pass
    for fmt in _TIME_FORMATS:
        try:
            dt = datetime.strptime(text.strip(), fmt).replace(tzinfo=timezone.utc)
            return dt.timestamp()
        except ValueError:
            continue
    raise ValueError(f"unparseable timestamp: {text!r}")


def _fix_ok(t: float, x: float, y: float, mode: str) -> bool:
    if not (math.isfinite(t) and math.isfinite(x) and math.isfinite(y)):
        return False
    if mode == GEOGRAPHIC and not (-180.0 <= x <= 180.0 and -90.0 <= y <= 90.0):
        return False
    return True


def parse_trajectories(source, schema: dict | None = None, mode: str = PLANAR,
                       min_fixes: int = DEFAULT_MIN_FIXES, delimiter: str = ",",
                       ) -> tuple[list[Trajectory], IngestReport]:
    """Parse delimited text into admitted trajectories plus an ingest report.

    ``source`` may be a path or an open text stream with a header row.
    ``schema`` maps the logical names id/t/x/y onto header column names.
    Rows whose cells do not parse (or whose fix is non-finite / out of
    range) are dropped and counted; ids ending up with fewer than
    ``min_fixes`` valid fixes land in ``report.rejected``. A missing
    schema column is a hard :class:`IngestError`.
    """
    if mode not in (PLANAR, GEOGRAPHIC):
        raise IngestError(f"unknown coordinate mode: {mode!r}")
    schema = {**DEFAULT_SCHEMA, **(schema or {})}
    if isinstance(source, (str, Path)):
        with open(source, "r", newline="") as fh:
            return parse_trajectories(fh, schema, mode, min_fixes, delimiter)

    reader = csv.reader(source, delimiter=delimiter)
    try:
        header = next(reader)
    except StopIteration:
        raise IngestError("input has no header row")
    header = [h.strip() for h in header]
    col = {}
    for key in ("id", "t", "x", "y"):
        name = schema[key]
        if name not in header:
            raise IngestError(f"schema column {name!r} not found in header {header}")
        col[key] = header.index(name)

    report = IngestReport()
    # id -> {t: (x, y)}; insertion order preserves first occurrence per id
    per_id: dict[str, dict[float, tuple[float, float]]] = {}
    needed = max(col.values()) + 1
    for row in reader:
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) < needed:
            report.malformed_rows += 1
            continue
        traj_id = row[col["id"]].strip()
        try:
            t = parse_timestamp(row[col["t"]])
            x = float(row[col["x"]])
            y = float(row[col["y"]])
        except ValueError:
            report.malformed_rows += 1
            # still note the id so the distinct-id accounting stays honest
            per_id.setdefault(traj_id, {})
            continue
        if not _fix_ok(t, x, y, mode):
            report.malformed_rows += 1
            per_id.setdefault(traj_id, {})
            continue
        fixes = per_id.setdefault(traj_id, {})
        if t in fixes:
            report.duplicates_dropped += 1
        else:
            fixes[t] = (x, y)

    admitted: list[Trajectory] = []
    for traj_id, fixes in per_id.items():
        if len(fixes) < min_fixes:
            report.rejected.append((traj_id, "too_few_fixes"))
            continue
        ts = sorted(fixes)
        traj = Trajectory(
            traj_id,
            np.array(ts),
            np.array([fixes[t][0] for t in ts]),
            np.array([fixes[t][1] for t in ts]),
            mode,
        )
        admitted.append(traj)
        report.admitted += 1
    return admitted, report


def validate_trajectory(traj: Trajectory, min_fixes: int | None = None) -> list[Violation]:
    """Pure check of the trajectory invariants.

    Returns an empty list iff all invariants hold; each violation names
    the invariant and the first offending fix index.
    """
    out: list[Violation] = []
    t, x, y = traj.t, traj.x, traj.y

    for name, arr in (("non_finite_t", t), ("non_finite_x", x), ("non_finite_y", y)):
        bad = np.flatnonzero(~np.isfinite(arr))
        if bad.size:
            out.append(Violation(name, int(bad[0])))
    if traj.mode == GEOGRAPHIC:
        bad = np.flatnonzero((x < -180.0) | (x > 180.0))
        if bad.size:
            out.append(Violation("lon_out_of_range", int(bad[0])))
        bad = np.flatnonzero((y < -90.0) | (y > 90.0))
        if bad.size:
            out.append(Violation("lat_out_of_range", int(bad[0])))
    if traj.n > 1:
        inversions = np.flatnonzero(np.diff(t) <= 0)
        if inversions.size:
            out.append(Violation("non_monotonic_t", int(inversions[0])))
    if min_fixes is not None and traj.n < min_fixes:
        out.append(Violation("too_few_fixes", 0))
    return out


def write_trajectories(trajectories: Iterable[Trajectory], sink,
                       schema: dict | None = None, delimiter: str = ",") -> None:
    """Serialize trajectories back to the delimited input format.

    Floats are written with shortest round-trip repr, so re-parsing
    reproduces the values bit for bit.
    """
    schema = {**DEFAULT_SCHEMA, **(schema or {})}
    if isinstance(sink, (str, Path)):
        with open(sink, "w", newline="") as fh:
            write_trajectories(trajectories, fh, schema, delimiter)
            return
    writer = csv.writer(sink, delimiter=delimiter, lineterminator="\n")
    writer.writerow([schema["id"], schema["t"], schema["x"], schema["y"]])
    for traj in trajectories:
        for t, x, y in zip(traj.t, traj.x, traj.y):
            writer.writerow([traj.id, repr(float(t)), repr(float(x)), repr(float(y))])


def trajectories_to_text(trajectories: Iterable[Trajectory],
                         schema: dict | None = None, delimiter: str = ",") -> str:
    buf = io.StringIO()
    write_trajectories(trajectories, buf, schema, delimiter)
    return buf.getvalue()
