#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Mirror paired one-slit current lines, their crossings of the symmetry line
    and the tangent swap relabelling

    :license: MIT, see LICENSE.txt for more details

A mirror pair consists of a current line traj1 of the slit 1 field and its
reflection traj2 through y = 0, which is a current line of the slit 2 field.
Whenever traj1 crosses the symmetry line traj2 crosses it at the same
abscissa in the opposite direction. Exchanging the labels at every crossing
yields two lines that stay in their half planes and touch y = 0 tangentially:
lower = -|y1|, upper = +|y1|.
"""
from __future__ import absolute_import
from collections import namedtuple, OrderedDict
import copy
import numpy as np
from scipy.optimize import brentq
from scipy.stats import ks_2samp
import slitlab
from slitlab.errors import DomainError
from slitlab.wavefield import WaveField, fringe_period
from slitlab.current import (
    Trajectory,
    integrate_trajectory,
    launch_grid,
    make_settings,
)

endpoint_comparison = namedtuple(
    "endpoint_comparison", ["statistic", "pvalue", "n_swapped", "n_bohmian"]
)


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def launch_window(physics, x0, center=0.0, margin=0.0, params=None):
    """
    Launch window center +- (margin + half width) at x0.

    The half width is LAUNCH_WIDTHS envelope widths, sigma |q(x0)| for the
    gaussian model and one fringe period pi x0 / (k a) for the point model.
    A line launched s0 off its slit center leaves at slope ~ s0 / (k sigma ** 2)
    (gaussian) or s0 / x0 (point), and that slope keeps growing until the
    paraxial forward current vanishes at slope sqrt(2).
    """
    widths = _merged_params(params)["LAUNCH_WIDTHS"]
    if physics.model == "gaussian":
        width = physics.sigma * abs(1.0 + 1j * x0 / (physics.k * physics.sigma ** 2))
    else:
        width = fringe_period(physics, x0)
    half = widths * width
    return (center - margin - half, center + margin + half)


def _crossing_brackets(y):
    """
    Index pairs (i, j) of consecutive non zero samples with opposite sign.
    Zero samples in between are skipped, isolated zeros without a sign
    change are tangential touches.
    """
    nonzero = np.nonzero(y != 0)[0]
    signs = np.sign(y[nonzero])
    changes = np.nonzero(signs[:-1] != signs[1:])[0]
    return [(int(nonzero[c]), int(nonzero[c + 1])) for c in changes]


def detect_crossings(trajectory, params=None):
    """
    Abscissae where a current line crosses the symmetry line y = 0.

    One crossing per sign change of y along the polyline. A sign change
    between adjacent samples is refined with Brent's method on the monotone
    cubic interpolant until |y(x*)| <= CROSSING_TOLERANCE times the
    polyline's transverse extent; if samples with y == 0 separate the two
    signs the first zero sample is the crossing.

    Args:
        trajectory (Trajectory): polyline with at least two points

    Returns:
        array: strictly increasing crossing abscissae

    Examples::

        >>> t = Trajectory(start=(0, -1), points=[(0, -1), (2, 1)])
        >>> detect_crossings(t)
        array([1.])
    """
    x, y = trajectory.x, trajectory.y
    if len(x) < 2:
        return np.array([], dtype=float)
    tolerance = _merged_params(params)["CROSSING_TOLERANCE"]
    scale = float(np.max(np.abs(y)))
    crossings = []
    for i, j in _crossing_brackets(y):
        if j > i + 1:
            crossings.append(x[i + 1])
            continue
        secant = abs(y[j] - y[i]) / (x[j] - x[i])
        # pchip derivatives stay within three secant slopes
        xtol = max(tolerance * scale / (3.0 * secant), 1e-300)
        crossings.append(
            brentq(trajectory.interpolator(), x[i], x[j], xtol=xtol)
        )
    return np.array(crossings, dtype=float)


def _crossing_directions(trajectory):
    """+1 for upward, -1 for downward crossings, in crossing order."""
    y = trajectory.y
    return [int(np.sign(y[j])) for i, j in _crossing_brackets(y)]


class MirrorPair(object):
    """
    Slit 1 current line and its reflection.

    Keyword Arguments:
        traj1 (Trajectory): current line of the one_slit_1 field
        traj2 (Trajectory): mirror partner, defaults to the exact reflection
        crossings (array): refined crossing abscissae of traj1, detected
            if not given
        pair_id (int): position in its ensemble
    """

    def __init__(self, traj1=None, traj2=None, crossings=None, pair_id=0, params=None):
        self.traj1 = traj1
        self.traj2 = traj1.mirrored() if traj2 is None else traj2
        if crossings is None:
            crossings = detect_crossings(traj1, params=params)
        self.crossings = np.asarray(crossings, dtype=float)
        self.pair_id = pair_id

    def __repr__(self):
        return "MirrorPair(id={0}, start_y={1}, crossings={2})".format(
            self.pair_id, self.traj1.start_y, len(self.crossings)
        )

    @property
    def x(self):
        return self.traj1.x

    def net_signed_crossings(self, x=None):
        """
        Sum of signed symmetry line crossings of both members up to x
        (all crossings if x is None). Mirror partners cross at the same
        abscissa in opposite directions, the sum is always zero.
        """
        total = 0
        for trajectory in (self.traj1, self.traj2):
            brackets = _crossing_brackets(trajectory.y)
            for (i, j), direction in zip(brackets, _crossing_directions(trajectory)):
                if x is None or trajectory.x[i] < x:
                    total += direction
        return total

    def swapped(self):
        return tangent_swap(self)


class SwappedPair(object):
    """
    Tangent swapped mirror pair: lower = -|y1|, upper = +|y1| on the pair's
    x samples plus the crossing abscissae, where both touch y = 0 exactly.
    """

    def __init__(self, pair=None):
        self.pair = pair
        self.pair_id = pair.pair_id
        self.crossings = pair.crossings
        x = np.concatenate([pair.traj1.x, pair.crossings])
        y1 = np.concatenate([pair.traj1.y, np.zeros(len(pair.crossings))])
        order = np.argsort(x, kind="mergesort")
        x, magnitude = x[order], np.abs(y1[order])
        keep = np.concatenate([[True], np.diff(x) > 0])
        x, magnitude = x[keep], magnitude[keep]
        self.lower = Trajectory(
            start=(x[0], -magnitude[0]),
            points=np.column_stack([x, -magnitude]),
            status=pair.traj1.status,
            settings=pair.traj1.settings,
        )
        self.upper = Trajectory(
            start=(x[0], magnitude[0]),
            points=np.column_stack([x, magnitude]),
            status=pair.traj1.status,
            settings=pair.traj1.settings,
        )

    def __repr__(self):
        return "SwappedPair(id={0}, crossings={1})".format(
            self.pair_id, len(self.crossings)
        )

    def evaluate(self, x):
        """(lower, upper) at x from the traj1 interpolant."""
        y1 = np.asarray(self.pair.traj1.at(x), dtype=float)
        magnitude = np.abs(y1)
        return -magnitude, magnitude


class PairEnsemble(list):
    """
    List of MirrorPair objects sharing one x grid.

    Attributes:
        x_grid (array): common resampling grid
        excluded (list): (start, status) of launches whose traj1 aborted
    """

    def __init__(self, pairs=(), x_grid=None, excluded=None):
        super(PairEnsemble, self).__init__(pairs)
        self.x_grid = x_grid
        self.excluded = [] if excluded is None else excluded

    def swapped(self):
        return [tangent_swap(pair) for pair in self]


def hidden_pair_ensemble(
    physics,
    n,
    x0,
    x_end,
    settings=None,
    y_window=None,
    params=None,
    verbose=False,
):
    """
    Ensemble of mirror pairs.

    traj1 is integrated on the one_slit_1 field from equal probability
    launches (`launch_grid`, side both) around slit 1, traj2 is its exact
    reflection. All pairs are resampled to RESAMPLE_POINTS uniform x samples.

    Args:
        physics (physics_params): physics parameters
        n (int): number of pairs, 0 gives an empty ensemble
        x0 (float): launch abscissa
        x_end (float): final abscissa
        settings (integrator_settings): see `slitlab.current.make_settings`
        y_window (tuple): launch window, defaults to `launch_window` around
            y = -a

    Returns:
        PairEnsemble: pairs in launch order; aborted launches are listed in
        `excluded`
    """
    p = _merged_params(params)
    x_grid = np.linspace(x0, x_end, p["RESAMPLE_POINTS"])
    if n < 0:
        raise DomainError("require n >= 0, got {0}".format(n))
    if n == 0:
        return PairEnsemble(x_grid=x_grid)
    field = WaveField(kind="one_slit_1", params=physics)
    if y_window is None:
        y_window = launch_window(physics, x0, center=-physics.a, params=p)
    if settings is None:
        settings = make_settings(field=field, x0=x0, x_end=x_end, params=p)
    starts = launch_grid(field, x0, "both", n, y_window, params=p)
    pairs = []
    excluded = []
    for start in starts:
        trajectory = integrate_trajectory(field, start, x_end, settings=settings)
        if not trajectory.completed:
            excluded.append((tuple(start), trajectory.status))
            if verbose:
                print(
                    "> Excluded pair launched at y0={0:.6g}: {1}".format(
                        start[1], trajectory.status
                    )
                )
            continue
        traj1 = trajectory.resampled(x_grid)
        pairs.append(MirrorPair(traj1=traj1, pair_id=len(pairs), params=p))
    if verbose:
        print(
            "> Built {0} mirror pairs, {1} crossings in total".format(
                len(pairs), sum(len(pair.crossings) for pair in pairs)
            )
        )
    return PairEnsemble(pairs, x_grid=x_grid, excluded=excluded)


def tangent_swap(pair):
    """
    Relabels a mirror pair at every crossing.

    Returns:
        SwappedPair: lower = -|y1(x)| <= 0, upper = +|y1(x)| >= 0; at every
        sample {lower, upper} equals {y1, y2} as multisets
    """
    return SwappedPair(pair=pair)


def _members(pair):
    """[(trajectory, home side)], traj1 and lower belong to y <= 0."""
    if isinstance(pair, SwappedPair):
        return [(pair.lower, "lower"), (pair.upper, "upper")]
    return [(pair.traj1, "lower"), (pair.traj2, "upper")]


def ensemble_occupancy(pairs, x_slices):
    """
    Number of ensemble members per half plane at each slice.

    Works on raw MirrorPairs and on SwappedPairs. A member exactly on y = 0
    counts in its home half plane (traj1 and lower: y <= 0).

    Returns:
        OrderedDict: x_slice -> (count_lower, count_upper)
    """
    table = OrderedDict()
    for x_slice in np.asarray(x_slices, dtype=float):
        lower, upper = 0, 0
        for pair in pairs:
            for trajectory, home in _members(pair):
                y = float(trajectory.at(x_slice))
                assert np.isfinite(y), "slice {0} outside pair grid".format(x_slice)
                if y < 0 or (y == 0 and home == "lower"):
                    lower += 1
                else:
                    upper += 1
        table[float(x_slice)] = (lower, upper)
    return table


def cross_check_mirror(pair, physics, settings=None, params=None):
    """
    Integrates the mirror partner independently on the one_slit_2 field and
    returns its maximal deviation from the reflected traj2 on the pair grid.
    """
    field = WaveField(kind="one_slit_2", params=physics)
    x = pair.traj2.x
    start = (pair.traj2.start_x, pair.traj2.start_y)
    if settings is None:
        settings = pair.traj1.settings
    trajectory = integrate_trajectory(
        field, start, x[-1], settings=settings, params=params
    )
    if not trajectory.completed:
        return np.inf
    return float(np.max(np.abs(trajectory.resampled(x).y - pair.traj2.y)))


def endpoint_discrepancy(
    ensemble, physics, settings=None, y_window=None, params=None, verbose=False
):
    """
    Compares the endpoints of the swapped upper lines with endpoints of
    current lines of the two-slit field launched in y >= 0.

    The two-sample Kolmogorov-Smirnov statistic is a diagnostic: swapped
    one-slit lines transport one-slit densities and do not carry the
    interference term.

    Args:
        ensemble (PairEnsemble): non empty ensemble
        y_window (tuple): launch window of the two-slit lines

    Returns:
        endpoint_comparison: (statistic, pvalue, n_swapped, n_bohmian)
    """
    assert len(ensemble) > 0, "require a non empty ensemble"
    x0, x_end = float(ensemble.x_grid[0]), float(ensemble.x_grid[-1])
    swapped_ends = np.array([pair.swapped().upper.y[-1] for pair in ensemble])
    field = WaveField(kind="two_slit", params=physics)
    if y_window is None:
        y_window = launch_window(physics, x0, margin=physics.a, params=params)
    if settings is None:
        settings = make_settings(field=field, x0=x0, x_end=x_end, params=params)
    starts = launch_grid(field, x0, "upper", len(ensemble), y_window, params=params)
    bohmian_ends = []
    for start in starts:
        trajectory = integrate_trajectory(field, start, x_end, settings=settings)
        if trajectory.completed:
            bohmian_ends.append(trajectory.y[-1])
    result = ks_2samp(swapped_ends, np.array(bohmian_ends))
    if verbose:
        print(
            "> Endpoint KS statistic {0:.4f} (p={1:.3g})".format(
                result.statistic, result.pvalue
            )
        )
    return endpoint_comparison(
        statistic=float(result.statistic),
        pvalue=float(result.pvalue),
        n_swapped=len(swapped_ends),
        n_bohmian=len(bohmian_ends),
    )
