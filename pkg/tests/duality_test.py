#!/usr/bin/env python
# encoding: utf-8
"""

Tests for slitlab.duality: visibility, predictability and the interference
deficit

"""
import math
import unittest
import numpy as np
import pytest
import slitlab
import slitlab.knowledge_base as kb
from slitlab.errors import DomainError, ResolutionError
from slitlab.wavefield import make_params

GAUSSIAN = make_params(E=50.0, a=1.0, sigma=0.25)
CLOSE = make_params(E=50.0, a=0.5, sigma=0.25)
POINT = make_params(E=50.0, a=1.0, sigma=0.25, model="point")

PREDICTABILITY_TESTS = [
    {"weights": (1.0, 1.0), "P": 0.0},
    {"weights": (math.sqrt(0.9), math.sqrt(0.1)), "P": 0.8},
    {"weights": (0.0, 2.0j), "P": 1.0},
    {"weights": (3.0, 4.0j), "P": 0.28},
]


def detection_grid(physics, L, n=2001):
    period = slitlab.fringe_period(physics, L)
    return np.linspace(-2.0 * period, 2.0 * period, n)


def predictability_test():
    for test_dict in PREDICTABILITY_TESTS:
        assert slitlab.predictability(*test_dict["weights"]) == pytest.approx(
            test_dict["P"]
        )


def normalized_weights_test():
    c1, c2 = slitlab.normalized_weights(3.0, 4.0j)
    assert c1 == pytest.approx(0.6)
    assert c2 == pytest.approx(0.8j)
    with pytest.raises(DomainError):
        slitlab.normalized_weights(0, 0)


class TestVisibility(unittest.TestCase):
    def setUp(self):
        self.L = 100.0
        self.y_grid = detection_grid(POINT, self.L)

    def test_point_splits(self):
        # point sources carry equal envelopes: V = 2 |c1 c2| exactly
        for share, (P, V) in sorted(kb.duality_splits.items()):
            report = slitlab.duality_report(
                POINT, math.sqrt(share), math.sqrt(1.0 - share), self.L, self.y_grid
            )
            self.assertAlmostEqual(report.P, P, places=12)
            self.assertLess(abs(report.V - V), 1e-6)
            self.assertLess(abs(report.duality_sum - (P ** 2 + V ** 2)), 1e-6)

    def test_physics_from_slice(self):
        field = slitlab.WaveField("weighted", POINT, weights=(0.6, 0.8))
        sample = slitlab.intensity_slice(field, self.L, self.y_grid)
        self.assertIs(sample.physics, POINT)
        self.assertEqual(slitlab.visibility(sample), slitlab.visibility(sample, POINT))
        self.assertLess(abs(slitlab.visibility(sample) - 0.96), 1e-6)

    def test_coarse_grid(self):
        field = slitlab.WaveField("two_slit", POINT)
        sample = slitlab.intensity_slice(field, self.L, np.linspace(-60.0, 60.0, 21))
        with self.assertRaises(ResolutionError):
            slitlab.visibility(sample)

    def test_short_grid(self):
        field = slitlab.WaveField("two_slit", POINT)
        sample = slitlab.intensity_slice(field, self.L, np.linspace(0.0, 1.0, 101))
        with self.assertRaises(ResolutionError):
            slitlab.visibility(sample)

    def test_single_slit_has_no_fringes(self):
        L = kb.duality_far_field
        report = slitlab.duality_report(GAUSSIAN, 1.0, 0.0, L, detection_grid(GAUSSIAN, L))
        self.assertEqual(report.V, 0.0)
        self.assertEqual(report.P, 1.0)
        self.assertAlmostEqual(report.deficit_integral, 0.0, places=12)


def gaussian_duality_bound_test():
    L = kb.duality_far_field
    records = slitlab.duality_sweep(GAUSSIAN, kb.weight_sweep, L, detection_grid(GAUSSIAN, L))
    assert len(records) == len(kb.weight_sweep)
    assert max(r.duality_sum for r in records) <= 1.0 + 1e-6
    balanced = records[len(records) // 2]
    assert abs(balanced.c1) ** 2 == pytest.approx(0.5)
    assert balanced.V > 0.99


def duality_sweep_entries_test():
    y_grid = detection_grid(POINT, 100.0)
    records = slitlab.duality_sweep(POINT, [0.9, (1.0, 1.0j)], 100.0, y_grid)
    assert records[0].c1 == pytest.approx(math.sqrt(0.9))
    assert records[1].c2 == pytest.approx(1j / math.sqrt(2.0))
    assert records[1].V == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(DomainError):
        slitlab.duality_sweep(POINT, [1.5], 100.0, y_grid)


def interference_deficit_test():
    y_grid = np.linspace(-10.0, 10.0, 20001)
    result = slitlab.interference_deficit(CLOSE, 5.0, y_grid)
    first = slitlab.one_slit_amplitude(CLOSE, 1, 5.0, y_grid).value
    second = slitlab.one_slit_amplitude(CLOSE, 2, 5.0, y_grid).value
    np.testing.assert_allclose(
        result.pointwise, 2.0 * (np.conj(first) * second).real, rtol=0, atol=1e-12
    )
    # 2 Re <psi_1|psi_2> = 2 sigma sqrt(pi) exp(-a ** 2 / sigma ** 2) at every x
    expected = 2.0 * 0.25 * math.sqrt(math.pi) * math.exp(-4.0)
    assert result.integral == pytest.approx(expected, rel=1e-6)


def deficit_decay_test():
    y_grid = np.linspace(-3.0, 3.0, 40001)
    separations = [0.5, 1.0, 2.0, 4.0]
    integrals = slitlab.deficit_decay(GAUSSIAN, 0.1, separations, y_grid)
    assert integrals.shape == (4,)
    assert np.all(integrals > 0)
    assert np.all(np.diff(integrals) < 0)
    with pytest.raises(DomainError):
        slitlab.deficit_decay(GAUSSIAN, 0.1, [0.0], y_grid)
