#!/usr/bin/env python
# encoding: utf-8
"""

Tests for slitlab.current: probability current, Bohmian velocity, current
line integration and the no-crossing property

"""
import math
import unittest
import numpy as np
import pytest
import slitlab
from slitlab.current import Trajectory, integrator_settings
from slitlab.errors import DomainError, NodeError
from slitlab.wavefield import WaveField, make_params

GAUSSIAN_K1 = make_params(E=0.5, a=1.0, sigma=0.25)
GAUSSIAN = make_params(E=50.0, a=1.0, sigma=0.25)
POINT = make_params(E=50.0, a=1.0, sigma=0.25, model="point")

CURRENT_TESTS = [
    # at the slit center on the first screen j_x = k - 1 / (2 k sigma ** 2)
    {"physics": GAUSSIAN_K1, "point": (0.0, -1.0), "jx": 1.0 - 8.0, "jy": 0.0},
    {"physics": GAUSSIAN, "point": (0.0, -1.0), "jx": 10.0 - 0.8, "jy": 0.0},
]


def slit_center_current_test():
    for test_dict in CURRENT_TESTS:
        field = WaveField("one_slit_1", test_dict["physics"])
        current = slitlab.probability_current(field, *test_dict["point"])
        assert current.jx == pytest.approx(test_dict["jx"])
        assert current.jy == pytest.approx(test_dict["jy"], abs=1e-14)


def symmetry_line_current_test():
    for physics in (GAUSSIAN_K1, GAUSSIAN, POINT):
        field = WaveField("two_slit", physics)
        x = np.linspace(max(physics.x_min, 0.01), 20.0, 200)
        current = slitlab.probability_current(field, x, np.zeros_like(x))
        assert np.all(current.jy == 0)


def one_slit_current_points_away_test():
    # slit 1 sits below the symmetry line, its current crosses it upwards
    field = WaveField("one_slit_1", GAUSSIAN)
    current = slitlab.probability_current(field, np.array([1.0, 3.0]), 0.0)
    assert np.all(current.jy > 0)


def bohmian_velocity_test():
    field = WaveField("one_slit_1", GAUSSIAN)
    vx, vy = slitlab.bohmian_velocity(field, 0.0, -1.0)
    assert vx == pytest.approx(9.2)
    assert vy == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(NodeError):
        # ten widths away from the slit
        slitlab.bohmian_velocity(field, 0.0, 1.5)


NODE_TESTS = [
    # dark fringes of the point model at y = pi L / (2 k a) (2 m + 1)
    {"physics": POINT, "x": 100.0, "y": 5.0 * math.pi},
    {"physics": POINT, "x": 100.0, "y": -15.0 * math.pi},
    {"physics": POINT, "x": 50.0, "y": 2.5 * math.pi},
]


def bohmian_velocity_at_fringe_node_test():
    for test_dict in NODE_TESTS:
        field = WaveField("two_slit", test_dict["physics"])
        with pytest.raises(NodeError):
            slitlab.bohmian_velocity(field, test_dict["x"], test_dict["y"])


def make_settings_test():
    field = WaveField("two_slit", GAUSSIAN)
    settings = slitlab.make_settings(field=field, x0=0.0, x_end=5.0)
    assert settings.rel_tol == slitlab.params["REL_TOL"]
    assert settings.max_step == pytest.approx(0.05)
    assert settings.abs_tol == pytest.approx(
        slitlab.params["ABS_TOL_SCALE"] * field.transverse_scale(5.0)
    )
    with pytest.raises(DomainError):
        slitlab.make_settings(field=field, x0=0.0, x_end=5.0, rel_tol=1e-14)
    with pytest.raises(DomainError):
        slitlab.make_settings(field=field, x0=0.0, x_end=5.0, max_step=-1.0)


class TestIntegration(unittest.TestCase):
    def setUp(self):
        self.first = WaveField("one_slit_1", GAUSSIAN)
        self.second = WaveField("one_slit_2", GAUSSIAN)
        self.settings = slitlab.make_settings(field=self.first, x0=0.0, x_end=5.0)

    def test_against_fixed_step_reference(self):
        # inside the launch window, |y0 + a| <= sigma
        starts = [-1.25, -1.0, -0.9, -0.8]
        ends = []
        for y0 in starts:
            trajectory = slitlab.integrate_trajectory(
                self.first, (0.0, y0), 5.0, settings=self.settings
            )
            self.assertEqual(trajectory.status, "completed")
            self.assertEqual(trajectory.x[-1], 5.0)
            self.assertTrue(np.all(np.diff(trajectory.x) > 0))
            ends.append(trajectory.y[-1])
        oracle = slitlab.fixed_step_oracle(self.first, (0.0, np.array(starts)), 5.0, 4000)
        scale = self.first.transverse_scale(5.0)
        self.assertLess(np.max(np.abs(np.array(ends) - oracle)) / scale, 1e-6)

    def test_center_line_stays_on_center(self):
        trajectory = slitlab.integrate_trajectory(
            self.first, (0.0, -1.0), 5.0, settings=self.settings
        )
        np.testing.assert_allclose(trajectory.y, -1.0, atol=1e-12)

    def test_mirror_is_exact(self):
        lower = slitlab.integrate_trajectory(
            self.first, (0.0, -0.8), 5.0, settings=self.settings
        )
        upper = slitlab.integrate_trajectory(
            self.second, (0.0, 0.8), 5.0, settings=self.settings
        )
        np.testing.assert_array_equal(lower.x, upper.x)
        np.testing.assert_array_equal(lower.y, -upper.y)
        mirrored = lower.mirrored()
        np.testing.assert_array_equal(mirrored.y, upper.y)
        self.assertEqual(mirrored.start_y, 0.8)

    def test_backflow_abort(self):
        # k sigma < 1 / sqrt(2): the current at the slit center runs backwards
        field = WaveField("one_slit_1", GAUSSIAN_K1)
        trajectory = slitlab.integrate_trajectory(field, (0.0, -1.0), 1.0)
        self.assertEqual(trajectory.status, "backflow_abort")
        self.assertFalse(trajectory.completed)
        self.assertEqual(len(trajectory), 1)

    def test_launch_on_node(self):
        with self.assertRaises(NodeError):
            slitlab.integrate_trajectory(self.first, (0.0, 1.5), 5.0)

    def test_invalid_range(self):
        with self.assertRaises(DomainError):
            slitlab.integrate_trajectory(self.first, (2.0, -1.0), 1.0)
        point = WaveField("one_slit_1", POINT)
        with self.assertRaises(DomainError):
            slitlab.integrate_trajectory(point, (POINT.x_min / 2.0, -1.0), 1.0)


class TestTrajectory(unittest.TestCase):
    def setUp(self):
        self.trajectory = Trajectory(
            start=(0.0, -1.0), points=[(0.0, -1.0), (1.0, 0.0), (2.0, 1.0)]
        )

    def test_properties(self):
        np.testing.assert_array_equal(self.trajectory.x, [0.0, 1.0, 2.0])
        np.testing.assert_array_equal(self.trajectory.y, [-1.0, 0.0, 1.0])
        self.assertTrue(self.trajectory.completed)
        self.assertEqual(self.trajectory.abs_tol, 0.0)

    def test_interpolation(self):
        self.assertAlmostEqual(float(self.trajectory.at(0.5)), -0.5)
        self.assertTrue(math.isnan(float(self.trajectory.at(2.5))))

    def test_resampled_keeps_end_points(self):
        resampled = self.trajectory.resampled(np.linspace(0.0, 2.0, 9))
        self.assertEqual(len(resampled), 9)
        self.assertEqual(resampled.y[0], -1.0)
        self.assertEqual(resampled.y[-1], 1.0)

    def test_unknown_status(self):
        with self.assertRaises(AssertionError):
            Trajectory(start=(0, 0), points=[(0, 0)], status="lost")


def launch_grid_quartiles_test():
    # two launches of a single slit sit at the quartiles of |psi| ** 2
    field = WaveField("one_slit_2", GAUSSIAN)
    window = (1.0 - 2.0, 1.0 + 2.0)
    starts = slitlab.launch_grid(field, 0.0, "both", 2, window)
    quartile = 0.6744897501960817 * GAUSSIAN.sigma / math.sqrt(2.0)
    np.testing.assert_allclose(starts[:, 1], [1.0 - quartile, 1.0 + quartile], atol=1e-4)
    np.testing.assert_array_equal(starts[:, 0], 0.0)


LAUNCH_MEDIAN_TESTS = [
    # side both, odd n: the middle launch is the median of a symmetric density
    {"physics": POINT, "x0": 10.0, "window": (-math.pi, math.pi), "n": 5},
    {"physics": POINT, "x0": 10.0, "window": (-math.pi, math.pi), "n": 7},
    {"physics": GAUSSIAN, "x0": 5.0, "window": (-3.0, 3.0), "n": 3},
]


def launch_grid_median_test():
    for test_dict in LAUNCH_MEDIAN_TESTS:
        field = WaveField("two_slit", test_dict["physics"])
        n = test_dict["n"]
        starts = slitlab.launch_grid(field, test_dict["x0"], "both", n, test_dict["window"])
        assert len(starts) == n
        assert abs(starts[n // 2, 1]) < 1e-9, test_dict
        np.testing.assert_allclose(starts[:, 1], -starts[::-1, 1], atol=1e-9)


def launch_grid_sides_test():
    field = WaveField("two_slit", GAUSSIAN)
    upper = slitlab.launch_grid(field, 0.0, "upper", 16, (-3.0, 3.0))
    lower = slitlab.launch_grid(field, 0.0, "lower", 16, (-3.0, 3.0))
    assert np.all(upper[:, 1] >= 0)
    assert np.all(lower[:, 1] <= 0)
    assert np.all(np.diff(upper[:, 1]) > 0)
    np.testing.assert_allclose(lower[:, 1], -upper[::-1, 1], atol=1e-9)
    with pytest.raises(DomainError):
        slitlab.launch_grid(field, 0.0, "upper", 0, (-3.0, 3.0))
    with pytest.raises(DomainError):
        slitlab.launch_grid(field, 0.0, "upper", 4, (-3.0, -1.0))


class TestFamily(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.field = WaveField("two_slit", GAUSSIAN)
        window = slitlab.launch_window(GAUSSIAN, 0.0, margin=GAUSSIAN.a)
        cls.family = slitlab.symmetric_family(cls.field, 0.0, 6, window, 5.0)

    def test_family_shape(self):
        self.assertEqual(len(self.family), 13)
        self.assertTrue(all(t.completed for t in self.family))
        start_y = [t.start_y for t in self.family]
        self.assertEqual(start_y, sorted(start_y))

    def test_confinement(self):
        for trajectory in self.family:
            if trajectory.start_y > 0:
                self.assertTrue(np.all(trajectory.y > 0))
            elif trajectory.start_y < 0:
                self.assertTrue(np.all(trajectory.y < 0))
            else:
                self.assertTrue(np.all(trajectory.y == 0))

    def test_mirror_pairs(self):
        for lower, upper in zip(self.family, self.family[::-1]):
            np.testing.assert_array_equal(lower.y, -upper.y)

    def test_ordering(self):
        report = slitlab.ordering_check(self.family, np.linspace(0.5, 4.5, 9))
        self.assertTrue(report.ok)
        self.assertIsNone(report.first_violation)


def ordering_violation_test():
    rising = Trajectory(start=(0.0, 0.0), points=[(0.0, 0.0), (1.0, 1.0)])
    falling = Trajectory(start=(0.0, 0.5), points=[(0.0, 0.5), (1.0, 0.2)])
    report = slitlab.ordering_check([falling, rising], [0.25, 0.9])
    assert report.ok is False
    assert report.first_violation == (0.9, (1, 0))


def flux_tube_test():
    # strongly paraxial beams: k * sigma = 20
    physics = make_params(E=800.0, a=2.0, sigma=0.5)
    field = WaveField("two_slit", physics)
    window = slitlab.launch_window(physics, 0.0, margin=physics.a)
    family = slitlab.symmetric_family(field, 0.0, 3, window, 2.0)
    assert all(t.completed for t in family)
    gaps = slitlab.flux_tube_gaps(field, family, [0.25, 1.0, 2.0])
    assert gaps.shape == (3, 6)
    assert np.all(gaps > 0)
    np.testing.assert_allclose(gaps, np.broadcast_to(gaps[0], gaps.shape), rtol=2e-2)


def integrator_settings_record_test():
    settings = integrator_settings(rel_tol=1e-8, abs_tol=1e-10, max_step=0.1, node_floor=1e-10)
    assert settings._fields == ("rel_tol", "abs_tol", "max_step", "node_floor")
