#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Wave-particle duality diagnostics: fringe visibility V, which-path
    predictability P, the relation P ** 2 + V ** 2 <= 1 and the interference
    deficit that breaks additivity of the one-slit probabilities

    :license: MIT, see LICENSE.txt for more details

"""
from __future__ import absolute_import
from collections import namedtuple
import copy
import math
import numpy as np
from scipy.integrate import trapezoid
import slitlab
from slitlab.errors import DomainError, ResolutionError
from slitlab.wavefield import (
    WaveField,
    fringe_period,
    intensity_slice,
    one_slit_amplitude,
)

duality_record = namedtuple(
    "duality_record", ["c1", "c2", "V", "P", "duality_sum", "deficit_integral"]
)

deficit = namedtuple("deficit", ["pointwise", "integral"])


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def normalized_weights(c1, c2):
    """
    Scales (c1, c2) to |c1| ** 2 + |c2| ** 2 = 1.

    Raises:
        DomainError: if both weights vanish
    """
    c1, c2 = complex(c1), complex(c2)
    norm = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2)
    if norm == 0:
        raise DomainError("at least one weight must be non zero")
    return c1 / norm, c2 / norm


def predictability(c1, c2):
    """
    Prior which-path predictability P = ||c1| ** 2 - |c2| ** 2| of the
    normalized weights.

    Examples::

        >>> predictability(math.sqrt(0.9), math.sqrt(0.1))
        0.8
    """
    c1, c2 = normalized_weights(c1, c2)
    return abs(abs(c1) ** 2 - abs(c2) ** 2)


def _refine_extremum(y, intensity, index):
    """Vertex of the parabola through the sample and its two neighbours."""
    if index <= 0 or index >= len(y) - 1:
        return y[index], intensity[index]
    ys = y[index - 1 : index + 2]
    c2, c1, c0 = np.polyfit(ys - y[index], intensity[index - 1 : index + 2], 2)
    if c2 == 0:
        return y[index], intensity[index]
    offset = -c1 / (2.0 * c2)
    offset = min(max(offset, ys[0] - y[index]), ys[2] - y[index])
    return y[index] + offset, c0 + c1 * offset + c2 * offset ** 2


def _fringe_contrast(y, intensity, index, maxima):
    """(M - m) / (M + m) of the minimum at index against its flanking maxima."""
    y_min, low = _refine_extremum(y, intensity, index)
    low = max(low, 0.0)
    before, after = maxima[maxima < index], maxima[maxima > index]
    flanks = []
    if len(before) > 0:
        flanks.append(_refine_extremum(y, intensity, int(before[-1])))
    if len(after) > 0:
        flanks.append(_refine_extremum(y, intensity, int(after[0])))
    flanks = [f for f in flanks if f[1] > 0]
    if len(flanks) == 0:
        high = max(intensity[0], intensity[-1])
    elif len(flanks) == 1:
        high = flanks[0][1]
    else:
        (y_left, i_left), (y_right, i_right) = flanks
        weight = (y_min - y_left) / (y_right - y_left)
        high = math.exp(
            math.log(i_left) + weight * (math.log(i_right) - math.log(i_left))
        )
    if not high > low:
        return 0.0
    return (high - low) / (high + low)


def visibility(sample, physics=None, params=None):
    """
    Central fringe visibility V = (M - m) / (M + m).

    m is a fringe minimum next to y = 0 (discrete scan plus parabolic
    refinement). M is the envelope of the maxima at the minimum's position:
    the two flanking maxima, refined the same way, are log-linearly
    interpolated to it. With a single flanking maximum (grid edge) that one
    is used directly.

    The nearest minimum on each side of y = 0 is evaluated and the smaller
    contrast is reported. Under unequal envelopes the side of the weaker slit
    sees locally balanced amplitudes and overstates the contrast of the
    symmetric point. Without an interior minimum V = 0.

    Args:
        sample (slice_sample): intensity slice, see `intensity_slice`
        physics (physics_params): sets the expected fringe period
            pi L / (k a), defaults to the physics the slice was sampled with

    Returns:
        float: V in [0, 1]

    Raises:
        ResolutionError: grid spacing above period / MIN_POINTS_PER_FRINGE
            or grid shorter than one period
    """
    if physics is None:
        physics = sample.physics
    p = _merged_params(params)
    y = np.asarray(sample.y_grid, dtype=float)
    intensity = np.asarray(sample.intensity, dtype=float)
    period = fringe_period(physics, sample.L)
    if len(y) < 3 or y[-1] - y[0] < period:
        raise ResolutionError(
            "slice spans less than one fringe period {0:.6g}".format(period)
        )
    spacing = float(np.max(np.diff(y)))
    if spacing > period / p["MIN_POINTS_PER_FRINGE"]:
        raise ResolutionError(
            "grid spacing {0:.6g} above {1} points per fringe period {2:.6g}".format(
                spacing, p["MIN_POINTS_PER_FRINGE"], period
            )
        )
    inner, left, right = intensity[1:-1], intensity[:-2], intensity[2:]
    minima = np.nonzero((inner < left) & (inner <= right))[0] + 1
    maxima = np.nonzero((inner > left) & (inner >= right))[0] + 1
    if len(minima) == 0:
        return 0.0
    candidates = set()
    lower, upper = minima[y[minima] <= 0], minima[y[minima] >= 0]
    if len(lower) > 0:
        candidates.add(int(lower[-1]))
    if len(upper) > 0:
        candidates.add(int(upper[0]))
    V = min(_fringe_contrast(y, intensity, i, maxima) for i in sorted(candidates))
    return float(min(max(V, 0.0), 1.0))


def duality_report(physics, c1, c2, L, y_grid, params=None):
    """
    Duality diagnostics of the weighted state c1 psi_1 + c2 psi_2.

    Args:
        physics (physics_params): physics parameters
        c1, c2 (complex): slit weights, normalized internally
        L (float): detection abscissa
        y_grid (array): detection grid, see `visibility` for requirements

    Returns:
        duality_record: normalized (c1, c2), V, P, P ** 2 + V ** 2 and the
        trapezoid integral of the interference term
        |c1 psi_1 + c2 psi_2| ** 2 - |c1 psi_1| ** 2 - |c2 psi_2| ** 2
    """
    c1, c2 = normalized_weights(c1, c2)
    field = WaveField(kind="weighted", params=physics, weights=(c1, c2))
    sample = intensity_slice(field, L, y_grid)
    V = visibility(sample, params=params)
    P = predictability(c1, c2)
    first = c1 * np.asarray(one_slit_amplitude(physics, 1, L, sample.y_grid).value)
    second = c2 * np.asarray(one_slit_amplitude(physics, 2, L, sample.y_grid).value)
    pointwise = sample.intensity - np.abs(first) ** 2 - np.abs(second) ** 2
    return duality_record(
        c1=c1,
        c2=c2,
        V=V,
        P=P,
        duality_sum=P ** 2 + V ** 2,
        deficit_integral=float(trapezoid(pointwise, sample.y_grid)),
    )


def interference_deficit(physics, L, y_grid):
    """
    Interference term of the equal weight two-slit state on the detection
    line, |Phi| ** 2 - |psi_1| ** 2 - |psi_2| ** 2 = 2 Re(conj(psi_1) psi_2).

    Returns:
        deficit: pointwise values on y_grid and their trapezoid integral
    """
    phi = intensity_slice(WaveField(kind="two_slit", params=physics), L, y_grid)
    first = np.abs(np.asarray(one_slit_amplitude(physics, 1, L, phi.y_grid).value)) ** 2
    second = np.abs(np.asarray(one_slit_amplitude(physics, 2, L, phi.y_grid).value)) ** 2
    pointwise = phi.intensity - first - second
    if len(phi.y_grid) > 1:
        integral = float(trapezoid(pointwise, phi.y_grid))
    else:
        integral = 0.0
    return deficit(pointwise=pointwise, integral=integral)


def duality_sweep(physics, weights, L, y_grid, params=None, verbose=False):
    """
    Duality reports over a weight sweep.

    Args:
        weights (list): entries are either |c1| ** 2 in (0, 1), expanded to
            real amplitudes (sqrt(w), sqrt(1 - w)), or (c1, c2) pairs

    Returns:
        list: of duality_record
    """
    records = []
    for entry in weights:
        if np.ndim(entry) == 0:
            w = float(entry)
            if not 0 <= w <= 1:
                raise DomainError("weight fraction must lie in [0, 1], got {0}".format(w))
            c1, c2 = math.sqrt(w), math.sqrt(1.0 - w)
        else:
            c1, c2 = entry
        record = duality_report(physics, c1, c2, L, y_grid, params=params)
        if verbose:
            print(
                "> |c1|^2={0:.3f}: P={1:.6f} V={2:.6f} P^2+V^2={3:.6f}".format(
                    abs(record.c1) ** 2, record.P, record.V, record.duality_sum
                )
            )
        records.append(record)
    return records


def deficit_decay(physics, L, separations, y_grid):
    """
    Integrated interference term as a function of the slit half separation.

    The integrand is evaluated in the overlap form 2 Re(conj(psi_1) psi_2),
    free of the cancellation in |Phi| ** 2 - |psi_1| ** 2 - |psi_2| ** 2, so
    the exponential decay stays resolved far below the one-slit intensities.

    Returns:
        array: integrals, one per separation
    """
    y_grid = np.asarray(y_grid, dtype=float)
    integrals = []
    for a in separations:
        if not a > 0:
            raise DomainError("separations must be > 0, got {0}".format(a))
        shifted = physics._replace(a=float(a))
        first = np.asarray(one_slit_amplitude(shifted, 1, L, y_grid).value)
        second = np.asarray(one_slit_amplitude(shifted, 2, L, y_grid).value)
        integrals.append(trapezoid(2.0 * (np.conj(first) * second).real, y_grid))
    return np.array(integrals, dtype=float)
