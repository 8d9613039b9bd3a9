#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Probability current, Bohmian velocity field and current line integration

    :license: MIT, see LICENSE.txt for more details

Current lines are parametrised by x. Along a line dy/dx = v_y / v_x = j_y / j_x,
which is well posed as long as j_x > 0; backflow (j_x <= 0) and nodes of the
wave function terminate a line with an explicit status instead of switching
the parametrisation.
"""
from __future__ import absolute_import
from collections import namedtuple
import copy
import numpy as np
from scipy.integrate import RK45, cumulative_trapezoid
from scipy.interpolate import PchipInterpolator
import slitlab
from slitlab.errors import DomainError, NodeError

current_vector = namedtuple("current_vector", ["jx", "jy"])

integrator_settings = namedtuple(
    "integrator_settings", ["rel_tol", "abs_tol", "max_step", "node_floor"]
)

ordering_report = namedtuple("ordering_report", ["ok", "first_violation"])

TRAJECTORY_STATES = ("completed", "node_abort", "backflow_abort", "domain_abort")

LAUNCH_SIDES = ("lower", "upper", "both")


class _Backflow(Exception):
    pass


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def _squeeze(array):
    array = np.asarray(array)
    if array.ndim == 0:
        return array[()]
    return array


def make_settings(
    field=None,
    x0=None,
    x_end=None,
    rel_tol=None,
    abs_tol=None,
    max_step=None,
    node_floor=None,
    params=None,
):
    """
    Integrator settings with defaults derived from the field and range.

    Defaults are rel_tol = REL_TOL, abs_tol = ABS_TOL_SCALE times the
    transverse scale of the field at x_end, max_step = MAX_STEP_FRACTION *
    (x_end - x0) and node_floor = NODE_FLOOR.

    Returns:
        integrator_settings: named tuple (rel_tol, abs_tol, max_step, node_floor)
    """
    p = _merged_params(params)
    if rel_tol is None:
        rel_tol = p["REL_TOL"]
    if abs_tol is None:
        assert field is not None and x_end is not None, "abs_tol default needs field"
        abs_tol = p["ABS_TOL_SCALE"] * field.transverse_scale(x_end)
    if max_step is None:
        assert x0 is not None and x_end is not None, "max_step default needs range"
        max_step = p["MAX_STEP_FRACTION"] * (x_end - x0)
    if node_floor is None:
        node_floor = p["NODE_FLOOR"]
    for name, value in (
        ("rel_tol", rel_tol),
        ("abs_tol", abs_tol),
        ("max_step", max_step),
        ("node_floor", node_floor),
    ):
        if not value > 0:
            raise DomainError("{0} must be > 0, got {1}".format(name, value))
    if rel_tol < 1e-12:
        raise DomainError("rel_tol must be >= 1e-12, got {0}".format(rel_tol))
    return integrator_settings(
        rel_tol=rel_tol, abs_tol=abs_tol, max_step=max_step, node_floor=node_floor
    )


def probability_current(field, x, y):
    """
    Probability current j = Im(conj(psi) grad psi), hbar = m = 1.

    Returns:
        current_vector: (jx, jy)
    """
    sample = field.evaluate(x, y)
    conj = np.conj(sample.value)
    return current_vector(
        jx=_squeeze(np.imag(conj * sample.d_psi_dx)),
        jy=_squeeze(np.imag(conj * sample.d_psi_dy)),
    )


def bohmian_velocity(field, x, y, reference_intensity=None, node_floor=None, params=None):
    """
    Bohmian velocity v = j / |psi| ** 2.

    Args:
        field (WaveField): field
        x, y (float or array): position(s)
        reference_intensity (float): intensity the node floor is relative to,
            defaults to the on axis one-slit intensity `field.axis_intensity(x)`
        node_floor (float): defaults to NODE_FLOOR

    Returns:
        tuple: (vx, vy)

    Raises:
        NodeError: if |psi| ** 2 < node_floor * reference_intensity
    """
    if node_floor is None:
        node_floor = _merged_params(params)["NODE_FLOOR"]
    if reference_intensity is None:
        reference_intensity = field.axis_intensity(x)
    sample = field.evaluate(x, y)
    intensity = np.abs(sample.value) ** 2
    if np.any(intensity <= 0) or np.any(intensity < node_floor * reference_intensity):
        raise NodeError(
            "intensity {0:.3e} below node floor at x={1}, y={2}".format(
                float(np.min(intensity)), x, y
            )
        )
    conj = np.conj(sample.value)
    vx = np.imag(conj * sample.d_psi_dx) / intensity
    vy = np.imag(conj * sample.d_psi_dy) / intensity
    return _squeeze(vx), _squeeze(vy)


class Trajectory(object):
    """
    Current line polyline with termination status.

    Keyword Arguments:
        start (tuple): launch point (x0, y0)
        points (array): (n, 2) array of accepted (x, y) points, x strictly
            increasing, points[0] == start
        status (str): one of `TRAJECTORY_STATES`
        settings (integrator_settings): settings the line was integrated with
    """

    def __init__(self, start=None, points=None, status="completed", settings=None):
        assert status in TRAJECTORY_STATES, "unknown status {0}".format(status)
        self.start_x, self.start_y = float(start[0]), float(start[1])
        self.points = np.asarray(points, dtype=float).reshape(-1, 2)
        self.status = status
        self.settings = settings
        self._interpolator = None

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return "Trajectory(start=({0}, {1}), n={2}, status={3!r})".format(
            self.start_x, self.start_y, len(self), self.status
        )

    @property
    def x(self):
        return self.points[:, 0]

    @property
    def y(self):
        return self.points[:, 1]

    @property
    def completed(self):
        return self.status == "completed"

    @property
    def abs_tol(self):
        if self.settings is None:
            return 0.0
        return self.settings.abs_tol

    def interpolator(self):
        """Monotone cubic (PCHIP) interpolant y(x) of the polyline."""
        if self._interpolator is None:
            assert len(self) >= 2, "interpolation requires at least two points"
            self._interpolator = PchipInterpolator(self.x, self.y, extrapolate=False)
        return self._interpolator

    def at(self, x):
        """y(x) on the monotone cubic interpolant, nan outside [x0, x_last]."""
        return _squeeze(self.interpolator()(x))

    def mirrored(self):
        """Reflection through the symmetry line y = 0."""
        return Trajectory(
            start=(self.start_x, -self.start_y),
            points=self.points * np.array([1.0, -1.0]),
            status=self.status,
            settings=self.settings,
        )

    def resampled(self, x_grid):
        """Trajectory on the given x grid, exact start and end points kept."""
        x_grid = np.asarray(x_grid, dtype=float)
        y = np.asarray(self.interpolator()(x_grid), dtype=float)
        if x_grid[0] == self.x[0]:
            y[0] = self.y[0]
        if x_grid[-1] == self.x[-1]:
            y[-1] = self.y[-1]
        return Trajectory(
            start=(x_grid[0], y[0]),
            points=np.column_stack([x_grid, y]),
            status=self.status,
            settings=self.settings,
        )


def integrate_trajectory(field, start, x_end, settings=None, params=None):
    """
    Integrates a current line dy/dx = j_y / j_x from start to x_end.

    The adaptive Dormand-Prince 4(5) embedded pair of scipy (RK45) is stepped
    manually, every accepted step becomes a polyline point.

    Args:
        field (WaveField): field to follow
        start (tuple): (x0, y0) with x0 < x_end
        x_end (float): final abscissa
        settings (integrator_settings): see `make_settings`

    Returns:
        Trajectory: with status completed, node_abort, backflow_abort or
        domain_abort; aborted lines end at the last accepted point

    Raises:
        DomainError: start or x_end outside the field domain, x0 >= x_end
        NodeError: launch intensity below the node floor
    """
    x0, y0 = float(start[0]), float(start[1])
    if not x0 < x_end:
        raise DomainError("require x0 < x_end, got {0} >= {1}".format(x0, x_end))
    field.domain_check(x0, y0)
    field.domain_check(x_end, y0)
    if settings is None:
        settings = make_settings(field=field, x0=x0, x_end=x_end, params=params)
    launch_intensity = field.intensity(x0, y0)
    if not launch_intensity > settings.node_floor * field.axis_intensity(x0):
        raise NodeError("launch point ({0}, {1}) sits on a node".format(x0, y0))
    floor = settings.node_floor * launch_intensity

    def slope(x, y_vector):
        y = y_vector[0]
        field.domain_check(x, y)
        sample = field.evaluate(x, y)
        value = sample.value
        if abs(value) ** 2 < floor:
            raise NodeError("node at x={0}, y={1}".format(x, y))
        jx = (np.conj(value) * sample.d_psi_dx).imag
        if not jx > 0:
            raise _Backflow()
        jy = (np.conj(value) * sample.d_psi_dy).imag
        return np.array([jy / jx])

    points = [(x0, y0)]
    status = "completed"
    try:
        solver = RK45(
            slope,
            x0,
            np.array([y0]),
            x_end,
            max_step=settings.max_step,
            rtol=settings.rel_tol,
            atol=settings.abs_tol,
        )
        while solver.status == "running":
            solver.step()
            if solver.status == "failed":
                # step size underflow, only seen next to nodes
                status = "node_abort"
                break
            points.append((solver.t, solver.y[0]))
    except NodeError:
        status = "node_abort"
    except _Backflow:
        status = "backflow_abort"
    except DomainError:
        status = "domain_abort"
    return Trajectory(start=(x0, y0), points=points, status=status, settings=settings)


def integrate_family(field, starts, x_end, settings=None, params=None, verbose=False):
    """
    Integrates a batch of current lines, output order equals launch order.

    Args:
        starts (array): (n, 2) launch points

    Returns:
        list: of Trajectory
    """
    trajectories = []
    for x0, y0 in np.asarray(starts, dtype=float).reshape(-1, 2):
        trajectory = integrate_trajectory(
            field, (x0, y0), x_end, settings=settings, params=params
        )
        if verbose and not trajectory.completed:
            print(
                "> Trajectory from ({0:.6g}, {1:.6g}) ended with {2}".format(
                    x0, y0, trajectory.status
                )
            )
        trajectories.append(trajectory)
    if verbose:
        print(
            "> Integrated {0} trajectories of {1}".format(len(trajectories), field)
        )
    return trajectories


def fixed_step_oracle(field, start, x_end, n_steps):
    """
    Classical fixed step RK4 reference for dy/dx = j_y / j_x.

    start may carry an array of y0 values, all lines are stepped at once.

    Returns:
        array: y at x_end for every y0
    """
    x0 = float(start[0])
    y = np.array(start[1], dtype=float)
    h = (x_end - x0) / n_steps

    def slope(x, y):
        current = probability_current(field, x, y)
        return np.asarray(current.jy) / np.asarray(current.jx)

    for step in range(n_steps):
        x = x0 + step * h
        k1 = slope(x, y)
        k2 = slope(x + h / 2.0, y + h / 2.0 * k1)
        k3 = slope(x + h / 2.0, y + h / 2.0 * k2)
        k4 = slope(x + h, y + h * k3)
        y = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return _squeeze(y)


def launch_grid(field, x0, side, n, y_window, params=None):
    """
    Equal probability launch points.

    Returns the (i + 1/2) / n quantiles (i = 0 .. n - 1) of |psi(x0, y)| ** 2
    restricted to the requested half plane and window, so that the density
    of launched lines mirrors the intensity. The distribution function is the
    cumulative trapezoid on a dense grid of LAUNCH_GRID_POINTS points.

    Args:
        field (WaveField): field
        x0 (float): launch abscissa
        side (str): 'lower' (y <= 0), 'upper' (y >= 0) or 'both'
        n (int): number of launches, n >= 1
        y_window (tuple): (ymin, ymax)

    Returns:
        array: (n, 2) array of (x0, y) launch points, y increasing

    Raises:
        DomainError: empty window or n < 1
        NodeError: windowed intensity vanishes
    """
    assert side in LAUNCH_SIDES, "side has to be one of {0}".format(LAUNCH_SIDES)
    if n < 1:
        raise DomainError("require n >= 1, got {0}".format(n))
    p = _merged_params(params)
    y_min, y_max = float(y_window[0]), float(y_window[1])
    if side == "lower":
        y_max = min(y_max, 0.0)
    elif side == "upper":
        y_min = max(y_min, 0.0)
    support = field.support
    y_min, y_max = max(y_min, support[0]), min(y_max, support[1])
    if not y_min < y_max:
        raise DomainError("empty launch window ({0}, {1})".format(y_min, y_max))
    grid = np.linspace(y_min, y_max, max(int(p["LAUNCH_GRID_POINTS"]), 2))
    intensity = field.intensity(x0, grid)
    if not np.max(intensity) > p["NODE_FLOOR"] * field.axis_intensity(x0):
        raise NodeError("windowed intensity vanishes at x0={0}".format(x0))
    cdf = cumulative_trapezoid(intensity, grid, initial=0.0)
    cdf = cdf / cdf[-1]
    quantiles = (np.arange(n) + 0.5) / n
    upper = np.clip(np.searchsorted(cdf, quantiles, side="left"), 1, len(grid) - 1)
    lower = upper - 1
    span = cdf[upper] - cdf[lower]
    fraction = np.where(span > 0, (quantiles - cdf[lower]) / np.where(span > 0, span, 1.0), 0.0)
    y = grid[lower] + fraction * (grid[upper] - grid[lower])
    return np.column_stack([np.full(n, float(x0)), y])


def symmetric_family(
    field, x0, n, y_window, x_end, settings=None, params=None, verbose=False
):
    """
    2 n + 1 current lines of a y-symmetric field: n upper half quantile
    launches, their exact mirrors and the axis line y0 = 0.

    Returns:
        list: of Trajectory sorted by launch ordinate
    """
    upper = launch_grid(field, x0, "upper", n, y_window, params=params)
    lower = upper[::-1] * np.array([1.0, -1.0])
    starts = np.vstack([lower, [[float(x0), 0.0]], upper])
    if settings is None:
        settings = make_settings(field=field, x0=x0, x_end=x_end, params=params)
    return integrate_family(
        field, starts, x_end, settings=settings, params=params, verbose=verbose
    )


def ordering_check(trajectories, x_slices, abs_tol=None):
    """
    Verifies that current lines never swap their launch ordering.

    Lines are ordered by launch ordinate; at every slice the interpolated
    ordinates have to keep that order. Violations smaller than 2 * abs_tol
    are ignored.

    Args:
        trajectories (list): completed Trajectory objects of one field
        x_slices (array): abscissae inside the common x range
        abs_tol (float): defaults to the largest integration abs_tol

    Returns:
        ordering_report: (ok, first_violation), first_violation is
        (x_slice, (i, j)) with i, j indices into `trajectories`, or None
    """
    assert all(t.completed for t in trajectories), "require completed trajectories"
    if abs_tol is None:
        abs_tol = max([t.abs_tol for t in trajectories] + [0.0])
    order = sorted(range(len(trajectories)), key=lambda i: trajectories[i].start_y)
    for x_slice in np.asarray(x_slices, dtype=float):
        ys = np.array([trajectories[i].at(x_slice) for i in order], dtype=float)
        assert np.all(np.isfinite(ys)), "slice {0} outside trajectory range".format(
            x_slice
        )
        gaps = np.diff(ys)
        bad = np.nonzero(gaps < -2.0 * abs_tol)[0]
        if len(bad) > 0:
            pos = int(bad[0])
            return ordering_report(
                ok=False, first_violation=(float(x_slice), (order[pos], order[pos + 1]))
            )
    return ordering_report(ok=True, first_violation=None)


def flux_tube_gaps(field, trajectories, x_slices, order=8):
    """
    Probability carried between neighbouring current lines.

    For every slice |psi| ** 2 is integrated between adjacent lines (sorted
    by launch ordinate) with an `order` point Gauss-Legendre rule. Along
    paraxial current lines the gaps are constant in x up to terms of order
    1 / (k * width) ** 2.

    Returns:
        array: shape (len(x_slices), len(trajectories) - 1)
    """
    nodes, weights = np.polynomial.legendre.leggauss(order)
    ordered = sorted(trajectories, key=lambda t: t.start_y)
    gaps = []
    for x_slice in np.asarray(x_slices, dtype=float):
        ys = np.array([t.at(x_slice) for t in ordered], dtype=float)
        lower, upper = ys[:-1], ys[1:]
        half = (upper - lower) / 2.0
        centers = (upper + lower) / 2.0
        sample_y = centers[:, None] + half[:, None] * nodes[None, :]
        intensity = np.asarray(field.intensity(x_slice, sample_y))
        gaps.append(np.sum(intensity * weights[None, :], axis=1) * half)
    return np.array(gaps)
