"""Movement-parameter series derived from a trajectory.

Three per-point series: speed (m/s), acceleration magnitude (m/s^2), and
unsigned turning angle (degrees, 0 = straight on, 180 = full reversal).
Ground distances are Euclidean in planar mode and great-circle in
geographic mode.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ingest import GEOGRAPHIC, PLANAR, Fix, Trajectory

EARTH_RADIUS_M = 6_371_008.8  # mean Earth radius

SPEED = "Speed"
ACCELERATION = "AccelerationMagnitude"
TURNING_ANGLE = "TurningAngle"


class SeriesError(Exception):
    """Trajectory too short for the requested parameter series."""


@dataclass(frozen=True)
class ParameterSeries:
    kind: str
    values: np.ndarray
    source_id: str

    def __post_init__(self):
        arr = np.ascontiguousarray(self.values, dtype=np.float64)
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.shape[0]


def haversine_m(lon1, lat1, lon2, lat2):
    """Great-circle distance in meters; accepts scalars or arrays (degrees)."""
    lon1, lat1, lon2, lat2 = (np.radians(np.asarray(v, dtype=np.float64))
                              for v in (lon1, lat1, lon2, lat2))
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    a = np.sin(dlat / 2.0) ** 2 + np.cos(lat1) * np.cos(lat2) * np.sin(dlon / 2.0) ** 2
    return EARTH_RADIUS_M * 2.0 * np.arcsin(np.minimum(1.0, np.sqrt(a)))


def ground_distance(a: Fix | tuple, b: Fix | tuple, mode: str = PLANAR) -> float:
    """Distance in meters between two fixes (x, y order per mode)."""
    if mode == GEOGRAPHIC:
        return float(haversine_m(a[1], a[2], b[1], b[2]))
    return float(np.hypot(b[1] - a[1], b[2] - a[2]))


def step_distances(traj: Trajectory) -> np.ndarray:
    """Ground distance of each consecutive fix pair, length n-1."""
    if traj.mode == GEOGRAPHIC:
        return haversine_m(traj.x[:-1], traj.y[:-1], traj.x[1:], traj.y[1:])
    return np.hypot(np.diff(traj.x), np.diff(traj.y))


def path_distances(x: np.ndarray, y: np.ndarray, mode: str) -> np.ndarray:
    """Consecutive-point ground distances for bare coordinate arrays."""
    if mode == GEOGRAPHIC:
        return haversine_m(x[:-1], y[:-1], x[1:], y[1:])
    return np.hypot(np.diff(x), np.diff(y))


def speed_series(traj: Trajectory) -> ParameterSeries:
    """Per-segment speed: distance over elapsed time, length n-1."""
    if traj.n < 2:
        raise SeriesError("too_short_for_speed")
    dist = step_distances(traj)
    dt = np.diff(traj.t)
    return ParameterSeries(SPEED, dist / dt, traj.id)


def acceleration_series(traj: Trajectory) -> ParameterSeries:
    """Magnitude of speed change between consecutive segments, length n-2.

    Speeds are differenced at segment-midpoint times, which is exact for
    piecewise-constant-speed motion.
    """
    if traj.n < 3:
        raise SeriesError("too_short_for_acceleration")
    v = speed_series(traj).values
    mid = (traj.t[:-1] + traj.t[1:]) / 2.0
    return ParameterSeries(ACCELERATION, np.abs(np.diff(v)) / np.diff(mid), traj.id)


def turning_angle_series(traj: Trajectory) -> ParameterSeries:
    """Unsigned course change at each interior fix, degrees in [0, 180].

    A zero-length displacement on either side contributes angle 0 (a stop
    is read as "no course change"). Geographic coordinates are projected
    onto a local tangent plane at the interior fix before measuring.
    """
    if traj.n < 3:
        raise SeriesError("too_short_for_turning")
    dx = np.diff(traj.x)
    dy = np.diff(traj.y)
    if traj.mode == GEOGRAPHIC:
        # equirectangular scaling about each interior fix; the common
        # Earth-radius factor cancels in the angle
        coslat = np.cos(np.radians(traj.y[1:-1]))
        ux, uy = dx[:-1] * coslat, dy[:-1].copy()
        vx, vy = dx[1:] * coslat, dy[1:].copy()
    else:
        ux, uy = dx[:-1], dy[:-1]
        vx, vy = dx[1:], dy[1:]
    cross = ux * vy - uy * vx
    dot = ux * vx + uy * vy
    angles = np.degrees(np.arctan2(np.abs(cross), dot))
    degenerate = ((ux == 0.0) & (uy == 0.0)) | ((vx == 0.0) & (vy == 0.0))
    angles[degenerate] = 0.0
    return ParameterSeries(TURNING_ANGLE, np.clip(angles, 0.0, 180.0), traj.id)
