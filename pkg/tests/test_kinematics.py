import math

import numpy as np
import pytest

from movedesc.ingest import GEOGRAPHIC, PLANAR, Trajectory
from movedesc.kinematics import (EARTH_RADIUS_M, SeriesError,
                                 acceleration_series, ground_distance,
                                 speed_series, turning_angle_series)


def planar(points, dt=1.0):
    t = np.arange(len(points)) * dt
    x = [p[0] for p in points]
    y = [p[1] for p in points]
    return Trajectory("p", t, x, y, PLANAR)


def test_ground_distance_planar_345():
    assert ground_distance((0, 0, 0), (0, 3, 4)) == 5.0


def test_ground_distance_same_point_geographic():
    assert ground_distance((0, 12.5, -30.0), (0, 12.5, -30.0), GEOGRAPHIC) == 0.0


def test_ground_distance_one_degree_at_equator():
    # closed form: one degree of longitude on the equator is R * pi / 180
    expected = EARTH_RADIUS_M * math.pi / 180.0
    got = ground_distance((0, 0, 0), (0, 1, 0), GEOGRAPHIC)
    assert got == pytest.approx(expected, abs=0.01)


def test_ground_distance_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = (0.0, rng.uniform(-179, 179), rng.uniform(-89, 89))
        b = (0.0, rng.uniform(-179, 179), rng.uniform(-89, 89))
        assert ground_distance(a, b, GEOGRAPHIC) == ground_distance(b, a, GEOGRAPHIC)
        assert ground_distance(a, b, GEOGRAPHIC) >= 0.0


def test_speed_simple():
    traj = Trajectory("s", [0, 10], [0, 10], [0, 0])
    assert list(speed_series(traj).values) == [1.0]


def test_speed_stationary():
    traj = Trajectory("s", [0, 5, 9], [2, 2, 2], [3, 3, 3])
    assert list(speed_series(traj).values) == [0.0, 0.0]


def test_speed_hand_case():
    traj = Trajectory("s", [0, 2, 4], [0, 6, 6], [0, 8, 8])
    assert list(speed_series(traj).values) == [5.0, 0.0]


def test_acceleration_constant_speed():
    traj = planar([(0, 0), (1, 0), (2, 0)])
    assert list(acceleration_series(traj).values) == [0.0]


def test_acceleration_hand_cases():
    # speeds 1 then 3 m/s over unit-duration segments: midpoints 2 s apart... use dt=2
    traj = Trajectory("a", [0, 2, 4], [0, 2, 8], [0, 0, 0])
    assert list(acceleration_series(traj).values) == [1.0]
    # deceleration has the same magnitude
    traj = Trajectory("a", [0, 2, 4], [0, 6, 8], [0, 0, 0])
    assert list(acceleration_series(traj).values) == [1.0]


def test_acceleration_too_short():
    with pytest.raises(SeriesError):
        acceleration_series(Trajectory("a", [0, 1], [0, 1], [0, 0]))


def test_turning_collinear():
    assert list(turning_angle_series(planar([(0, 0), (1, 0), (2, 0)])).values) == [0.0]


def test_turning_right_angle():
    assert list(turning_angle_series(planar([(0, 0), (1, 0), (1, 1)])).values) == [90.0]


def test_turning_reversal():
    assert list(turning_angle_series(planar([(0, 0), (1, 0), (0, 0)])).values) == [180.0]


def test_turning_zero_length_displacement():
    traj = planar([(0, 0), (0, 0), (1, 1)])
    assert list(turning_angle_series(traj).values) == [0.0]


def test_turning_too_short():
    with pytest.raises(SeriesError):
        turning_angle_series(Trajectory("a", [0, 1], [0, 1], [0, 0]))


def random_planar(rng, n=20):
    t = np.cumsum(rng.uniform(0.5, 3.0, n))
    x = np.cumsum(rng.normal(0, 5, n))
    y = np.cumsum(rng.normal(0, 5, n))
    return Trajectory("r", t, x, y, PLANAR)


def series_triple(traj):
    return (speed_series(traj).values, acceleration_series(traj).values,
            turning_angle_series(traj).values)


def test_translation_invariance():
    rng = np.random.default_rng(11)
    for _ in range(20):
        traj = random_planar(rng)
        moved = Trajectory(traj.id, traj.t, traj.x + 123.4, traj.y - 987.6, PLANAR)
        for a, b in zip(series_triple(traj), series_triple(moved)):
            np.testing.assert_allclose(a, b, rtol=1e-9, atol=1e-9)


def test_rotation_invariance():
    rng = np.random.default_rng(12)
    theta = 0.7
    c, s = math.cos(theta), math.sin(theta)
    for _ in range(20):
        traj = random_planar(rng)
        xr = c * traj.x - s * traj.y
        yr = s * traj.x + c * traj.y
        rotated = Trajectory(traj.id, traj.t, xr, yr, PLANAR)
        for a, b in zip(series_triple(traj), series_triple(rotated)):
            np.testing.assert_allclose(a, b, rtol=1e-9, atol=1e-9)


def test_time_shift_invariance():
    rng = np.random.default_rng(13)
    traj = random_planar(rng)
    shifted = Trajectory(traj.id, traj.t + 5_000.0, traj.x, traj.y, PLANAR)
    for a, b in zip(series_triple(traj), series_triple(shifted)):
        np.testing.assert_allclose(a, b, rtol=1e-9, atol=1e-9)


def test_scaling_behavior():
    rng = np.random.default_rng(14)
    traj = random_planar(rng)
    scaled = Trajectory(traj.id, traj.t, traj.x * 3.0, traj.y * 3.0, PLANAR)
    v0, a0, ang0 = series_triple(traj)
    v1, a1, ang1 = series_triple(scaled)
    np.testing.assert_allclose(v1, 3.0 * v0, rtol=1e-9)
    np.testing.assert_allclose(a1, 3.0 * a0, rtol=1e-9)
    np.testing.assert_allclose(ang1, ang0, rtol=1e-9, atol=1e-9)


def test_series_lengths():
    rng = np.random.default_rng(15)
    for n in (3, 4, 10, 57):
        traj = random_planar(rng, n)
        assert len(speed_series(traj)) == n - 1
        assert len(acceleration_series(traj)) == n - 2
        assert len(turning_angle_series(traj)) == n - 2


def test_value_ranges():
    rng = np.random.default_rng(16)
    for _ in range(10):
        traj = random_planar(rng)
        assert np.all(speed_series(traj).values >= 0)
        assert np.all(acceleration_series(traj).values >= 0)
        ang = turning_angle_series(traj).values
        assert np.all((ang >= 0) & (ang <= 180))


def test_geographic_turning_matches_planar_at_small_scale():
    # near the equator a tiny lon/lat box is effectively planar
    rng = np.random.default_rng(17)
    n = 15
    t = np.arange(n, dtype=float)
    x = np.cumsum(rng.normal(0, 1e-5, n))
    y = np.cumsum(rng.normal(0, 1e-5, n))
    geo = Trajectory("g", t, x, y, GEOGRAPHIC)
    flat = Trajectory("g", t, x, y, PLANAR)
    np.testing.assert_allclose(turning_angle_series(geo).values,
                               turning_angle_series(flat).values, atol=1e-4)
