#!/usr/bin/env python
# encoding: utf-8
"""

Tests for slitlab.wavefield: parameters, closed form amplitudes, symmetry
and analytic gradients

"""
import math
import unittest
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
import slitlab
from slitlab.errors import DomainError
from slitlab.wavefield import WaveField, make_params

GAUSSIAN_K1 = make_params(E=0.5, a=1.0, sigma=0.25)
GAUSSIAN = make_params(E=50.0, a=1.0, sigma=0.25)
POINT = make_params(E=50.0, a=1.0, sigma=0.25, model="point")

MAKE_PARAMS_TESTS = [
    {"input": {"E": 0.5, "a": 1.0, "sigma": 0.25}, "output": {"k": 1.0, "x_min": 0.000625}},
    {"input": {"E": 50.0, "a": 1.0, "sigma": 0.25}, "output": {"k": 10.0, "x_min": 0.00625}},
    {
        "input": {"E": 8.0, "a": 2.0, "model": "point", "x_min": 0.5},
        "output": {"k": 4.0, "x_min": 0.5},
    },
]

INVALID_PARAMS = [
    {"E": -1.0, "a": 1.0, "sigma": 0.25},
    {"E": 0.5, "a": 0.0, "sigma": 0.25},
    {"E": 0.5, "a": 1.0},
    {"E": 0.5, "a": 1.0, "sigma": float("nan")},
    {"E": 0.5, "a": 1.0, "model": "point"},
    {"E": 0.5, "a": 1.0, "sigma": 0.25, "model": "plane"},
]


def make_params_test():
    for test_dict in MAKE_PARAMS_TESTS:
        physics = make_params(**test_dict["input"])
        assert physics.k == pytest.approx(test_dict["output"]["k"])
        assert physics.x_min == pytest.approx(test_dict["output"]["x_min"])


def invalid_params_test():
    for kwargs in INVALID_PARAMS:
        with pytest.raises(DomainError):
            make_params(**kwargs)


def fringe_period_test():
    assert slitlab.fringe_period(GAUSSIAN, 5.0) == pytest.approx(math.pi / 2.0)
    assert slitlab.fringe_period(POINT, 100.0) == pytest.approx(10.0 * math.pi)


def slit_center_amplitude_test():
    # Psi_one is 1 at the slit center on the first screen
    sample = slitlab.one_slit_amplitude(GAUSSIAN, 1, 0.0, -1.0)
    assert sample.value == pytest.approx(1.0 + 0j)
    sample = slitlab.one_slit_amplitude(GAUSSIAN, 2, 0.0, 1.0)
    assert sample.value == pytest.approx(1.0 + 0j)


POINT_ZERO_TESTS = [
    # first dark fringe of the point model at y = pi L / (2 k a)
    {"L": 100.0, "zero": 5.0 * math.pi},
    {"L": 50.0, "zero": 2.5 * math.pi},
    {"L": 10.0, "zero": 0.5 * math.pi},
]


def point_first_zero_test():
    for test_dict in POINT_ZERO_TESTS:
        L, zero = test_dict["L"], test_dict["zero"]
        peak = abs(slitlab.two_slit_amplitude(POINT, L, 0.0).value) ** 2
        assert peak == pytest.approx(4.0 / L)
        at_zero = abs(slitlab.two_slit_amplitude(POINT, L, zero).value) ** 2
        assert at_zero < 1e-20 * peak
        y = np.linspace(0.0, 1.5 * zero, 3001)
        intensity = np.abs(slitlab.two_slit_amplitude(POINT, L, y).value) ** 2
        assert abs(y[np.argmin(intensity)] - zero) <= y[1] - y[0]


def point_intensity_test():
    y = np.linspace(-30.0, 30.0, 101)
    for x in (1.0, 10.0, 100.0):
        intensity = np.abs(slitlab.one_slit_amplitude(POINT, 1, x, y).value) ** 2
        np.testing.assert_allclose(intensity, 1.0 / x, rtol=1e-12)


def gaussian_norm_scaling_test():
    # |q| |Psi_one(x, 0)| ** 2 = 1 for every x
    for x in (0.0, 1.0, 5.0, 50.0):
        field = WaveField("one_slit_2", GAUSSIAN)
        assert field.intensity(x, 1.0) == pytest.approx(field.axis_intensity(x))


def superposition_test():
    x, y = 2.5, np.linspace(-3, 3, 61)
    first = slitlab.one_slit_amplitude(GAUSSIAN, 1, x, y)
    second = slitlab.one_slit_amplitude(GAUSSIAN, 2, x, y)
    phi = slitlab.two_slit_amplitude(GAUSSIAN, x, y)
    np.testing.assert_array_equal(phi.value, first.value + second.value)
    weighted = slitlab.weighted_amplitude(GAUSSIAN, 0.6, 0.8j, x, y)
    np.testing.assert_allclose(
        weighted.value, 0.6 * first.value + 0.8j * second.value, rtol=1e-14
    )


@settings(max_examples=50, deadline=None)
@given(
    x=st.floats(min_value=0.1, max_value=80.0),
    y=st.floats(min_value=-20.0, max_value=20.0),
)
def two_slit_mirror_symmetry_test(x, y):
    for physics in (GAUSSIAN_K1, GAUSSIAN, POINT):
        field = WaveField("two_slit", physics)
        upper = field.evaluate(x, y)
        lower = field.evaluate(x, -y)
        assert upper.value == lower.value
        assert upper.d_psi_dx == lower.d_psi_dx
        assert upper.d_psi_dy == -lower.d_psi_dy


@settings(max_examples=50, deadline=None)
@given(
    x=st.floats(min_value=0.5, max_value=5.0),
    y=st.floats(min_value=-3.0, max_value=3.0),
)
def one_slit_mirror_test(x, y):
    first = WaveField("one_slit_1", GAUSSIAN).evaluate(x, y)
    second = WaveField("one_slit_2", GAUSSIAN).evaluate(x, -y)
    assert first.value == second.value
    assert first.d_psi_dy == -second.d_psi_dy


def gradient_test():
    random_state = np.random.RandomState(7)
    for physics in (GAUSSIAN_K1, GAUSSIAN):
        x = random_state.uniform(0.5, 5.0, 200)
        y = random_state.uniform(-3.0, 3.0, 200)
        for kind in ("one_slit_1", "two_slit"):
            field = WaveField(kind, physics)
            sample = field.evaluate(x, y)
            fd_dx, fd_dy = slitlab.finite_difference_gradient(field, x, y)
            intensity = np.abs(sample.value) ** 2
            mask = intensity > 1e-10 * np.max(intensity)
            scale = physics.k * np.abs(sample.value) + np.hypot(
                np.abs(sample.d_psi_dx), np.abs(sample.d_psi_dy)
            )
            error = np.maximum(
                np.abs(fd_dx - sample.d_psi_dx), np.abs(fd_dy - sample.d_psi_dy)
            )
            assert np.max(error[mask] / scale[mask]) < 1e-6


def intensity_slice_test():
    field = WaveField("two_slit", GAUSSIAN)
    sample = slitlab.intensity_slice(field, 5.0, [-1.0, 0.0, 1.0])
    assert sample.L == 5.0
    assert sample.physics is GAUSSIAN
    np.testing.assert_allclose(sample.intensity, np.abs(sample.amplitude) ** 2)
    assert sample.intensity[0] == sample.intensity[2]
    with pytest.raises(DomainError):
        slitlab.intensity_slice(field, 5.0, [0.0, 0.0, 1.0])
    with pytest.raises(DomainError):
        slitlab.intensity_slice(field, 5.0, [])


class TestWaveField(unittest.TestCase):
    def setUp(self):
        self.phi = WaveField("two_slit", GAUSSIAN)
        self.lower = WaveField("restricted_lower", GAUSSIAN)
        self.upper = WaveField("restricted_upper", GAUSSIAN)
        self.y = np.linspace(-4.0, 4.0, 81)

    def test_restricted_sum(self):
        total = self.lower.evaluate(3.0, self.y).value + self.upper.evaluate(3.0, self.y).value
        np.testing.assert_array_equal(total, self.phi.evaluate(3.0, self.y).value)

    def test_restricted_on_symmetry_line(self):
        half = self.phi.evaluate(3.0, 0.0).value / 2.0
        self.assertEqual(self.lower.evaluate(3.0, 0.0).value, half)
        self.assertEqual(self.upper.evaluate(3.0, 0.0).value, half)

    def test_support(self):
        self.assertEqual(self.lower.support, (-math.inf, 0.0))
        self.assertEqual(self.upper.support, (0.0, math.inf))
        self.assertEqual(self.phi.support, (-math.inf, math.inf))
        self.assertEqual(self.upper.evaluate(3.0, -1.0).value, 0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            self.phi.evaluate(-0.1, 0.0)
        with self.assertRaises(DomainError):
            WaveField("two_slit", POINT).evaluate(POINT.x_min / 2.0, 0.0)
        with self.assertRaises(DomainError):
            WaveField("image_neumann", GAUSSIAN).evaluate(1.0, -0.5)
        with self.assertRaises(DomainError):
            self.phi.evaluate(1.0, float("inf"))

    def test_weighted_requires_weight(self):
        with self.assertRaises(DomainError):
            WaveField("weighted", GAUSSIAN, weights=(0, 0))

    def test_scales(self):
        self.assertAlmostEqual(self.phi.envelope_width(0.0), 0.25)
        point = WaveField("two_slit", POINT)
        self.assertAlmostEqual(point.envelope_width(100.0), 10.0 * math.pi)
        self.assertAlmostEqual(point.transverse_scale(100.0), 1.0 + 10.0 * math.pi)
        self.assertAlmostEqual(point.axis_intensity(4.0), 0.25)
