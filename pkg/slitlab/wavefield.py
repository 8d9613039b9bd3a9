#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Closed form stationary wave fields of the one- and two-slit experiment

    :license: MIT, see LICENSE.txt for more details

Units are hbar = m = 1, hence k = sqrt(2 E) and the probability current is
j = Im(conj(psi) grad psi) without prefactors. The slits sit on the first
screen (x = 0) at y = -a (slit 1) and y = +a (slit 2); propagation is along
+x towards the detection line x = L.

Two one-slit models are available:

    * **gaussian** paraxial Gaussian-aperture beam::

        Psi_one(x, y) = q(x) ** -1/2 * exp(i k x) * exp(-y ** 2 / (2 sigma ** 2 q(x)))
        q(x) = 1 + i x / (k sigma ** 2)

    * **point** Fresnel kernel (the sigma -> 0 limit), valid for x >= x_min::

        Psi_one(x, y) = x ** -1/2 * exp(i k x) * exp(i k y ** 2 / (2 x))

All evaluations are vectorised and accept scalars or numpy arrays for x and y.
"""
from __future__ import absolute_import
from collections import namedtuple
import copy
import math
import numpy as np
import slitlab
from slitlab.errors import DomainError

physics_params = namedtuple(
    "physics_params", ["E", "k", "a", "sigma", "model", "x_min"]
)

field_sample = namedtuple("field_sample", ["value", "d_psi_dx", "d_psi_dy"])

slice_sample = namedtuple(
    "slice_sample", ["L", "y_grid", "intensity", "amplitude", "physics"]
)

MODELS = ("gaussian", "point")

FIELD_KINDS = (
    "one_slit_1",
    "one_slit_2",
    "two_slit",
    "weighted",
    "image_neumann",
    "image_dirichlet",
    "restricted_lower",
    "restricted_upper",
)


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def _is_positive(value):
    return value is not None and math.isfinite(value) and value > 0


def make_params(E=None, a=None, sigma=None, model="gaussian", x_min=None, params=None):
    """
    Builds validated physics parameters.

    Keyword Arguments:
        E (float): energy in units hbar = m = 1
        a (float): slit half separation, slits are centered at y = -a, +a
        sigma (float): slit width of the gaussian model, for the point model
            it only sets the default x_min
        model (str): 'gaussian' or 'point'
        x_min (float): minimal evaluation abscissa of the point model,
            defaults to X_MIN_FACTOR * k * sigma ** 2
        params (dict): overrides of `slitlab.params`

    Returns:
        physics_params: named tuple (E, k, a, sigma, model, x_min), with
        k = sqrt(2 E)

    Examples::

        >>> make_params(E=0.5, a=1.0, sigma=0.25).k
        1.0
    """
    if model not in MODELS:
        raise DomainError("model must be one of {0}, got {1}".format(MODELS, model))
    for name, value in (("E", E), ("a", a), ("sigma", sigma), ("x_min", x_min)):
        if value is not None and not math.isfinite(value):
            raise DomainError("{0} must be finite, got {1}".format(name, value))
    if not _is_positive(E):
        raise DomainError("E must be > 0, got {0}".format(E))
    if not _is_positive(a):
        raise DomainError("a must be > 0, got {0}".format(a))
    if model == "gaussian" and not _is_positive(sigma):
        raise DomainError("sigma must be > 0 for the gaussian model, got {0}".format(sigma))
    if sigma is not None and sigma <= 0:
        raise DomainError("sigma must be > 0, got {0}".format(sigma))
    k = math.sqrt(2.0 * E)
    if x_min is None:
        if sigma is None:
            if model == "point":
                raise DomainError("point model requires x_min or sigma")
            x_min = 0.0
        else:
            x_min = _merged_params(params)["X_MIN_FACTOR"] * k * sigma ** 2
    if model == "point" and not _is_positive(x_min):
        raise DomainError("x_min must be > 0 for the point model, got {0}".format(x_min))
    return physics_params(E=E, k=k, a=a, sigma=sigma, model=model, x_min=x_min)


def fringe_period(params, x):
    """Far field fringe spacing pi x / (k a) of the symmetric two-slit pattern."""
    return math.pi * x / (params.k * params.a)


def _squeeze(array):
    array = np.asarray(array)
    if array.ndim == 0:
        return array[()]
    return array


def _check_x(params, x):
    x = np.asarray(x, dtype=float)
    lower = 0.0 if params.model == "gaussian" else params.x_min
    if not np.all(np.isfinite(x)):
        raise DomainError("x must be finite")
    if np.any(x < lower):
        raise DomainError(
            "x = {0} outside the {1} model domain x >= {2}".format(
                np.min(x), params.model, lower
            )
        )
    return x


def _one_slit_kernel(params, x, s):
    """
    Psi_one and its analytic gradient at shifted transverse coordinate s.

    The kernel is an even function of s, the y derivative an odd one, both
    bit for bit: s only enters via s ** 2 and a linear factor.
    """
    k = params.k
    if params.model == "gaussian":
        width2 = params.sigma ** 2
        dq = 1j / (k * width2)
        q = 1.0 + dq * x
        psi = np.exp(1j * k * x - s ** 2 / (2.0 * width2 * q)) / np.sqrt(q)
        dlog_dx = -0.5 * dq / q + 1j * k + s ** 2 * dq / (2.0 * width2 * q ** 2)
        dlog_dy = -s / (width2 * q)
    else:
        psi = np.exp(1j * (k * x + k * s ** 2 / (2.0 * x))) / np.sqrt(x)
        dlog_dx = -0.5 / x + 1j * k - 1j * k * s ** 2 / (2.0 * x ** 2)
        dlog_dy = 1j * k * s / x
    return psi, psi * dlog_dx, psi * dlog_dy


def _components(params, x, y):
    """Raw (psi1, psi2) samples, slit 1 at y = -a and slit 2 at y = +a."""
    x = _check_x(params, x)
    y = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(y)):
        raise DomainError("y must be finite")
    x, y = np.broadcast_arrays(x, y)
    first = _one_slit_kernel(params, x, y + params.a)
    second = _one_slit_kernel(params, x, y - params.a)
    return first, second


def _as_sample(triple):
    return field_sample(*[_squeeze(v) for v in triple])


def one_slit_amplitude(params, slit, x, y):
    """
    One-slit field psi_one^(slit)(x, y) = Psi_one(x, y +- a).

    Args:
        params (physics_params): see `make_params`
        slit (int): 1 (centered at y = -a) or 2 (centered at y = +a)
        x (float or array): abscissa, inside the model domain
        y (float or array): ordinate

    Returns:
        field_sample: value, d_psi_dx, d_psi_dy
    """
    assert slit in (1, 2), "slit has to be 1 or 2"
    first, second = _components(params, x, y)
    return _as_sample(first if slit == 1 else second)


def two_slit_amplitude(params, x, y):
    """
    Two-slit field Phi = psi_one^(1) + psi_one^(2), gradient likewise.
    """
    first, second = _components(params, x, y)
    return _as_sample([f + s for f, s in zip(first, second)])


def weighted_amplitude(params, c1, c2, x, y):
    """
    Weighted superposition c1 psi_one^(1) + c2 psi_one^(2).

    Raises:
        DomainError: if both weights vanish
    """
    if c1 == 0 and c2 == 0:
        raise DomainError("at least one weight must be non zero")
    c1, c2 = complex(c1), complex(c2)
    first, second = _components(params, x, y)
    return _as_sample([c1 * f + c2 * s for f, s in zip(first, second)])


class WaveField(object):
    """
    Evaluatable stationary wave field.

    Keyword Arguments:
        kind (str): one of `FIELD_KINDS`
        params (physics_params): physics parameters
        weights (tuple): (c1, c2) complex weights, 'weighted' kind only

    The restricted kinds are the half plane substates of the two-slit field::

        restricted_lower = Phi for y < 0, Phi / 2 at y = 0, 0 for y > 0
        restricted_upper = Phi for y > 0, Phi / 2 at y = 0, 0 for y < 0

    The image kinds live on y >= 0 and keep only slit 2 as physical source::

        image_neumann   = Psi_one(x, y - a) + Psi_one(x, y + a)
        image_dirichlet = Psi_one(x, y - a) - Psi_one(x, y + a)

    Instances are immutable and evaluation is a pure function of (x, y).
    """

    def __init__(self, kind=None, params=None, weights=None):
        assert kind in FIELD_KINDS, "unknown field kind {0}".format(kind)
        assert params is not None, "require physics params"
        if kind == "weighted":
            assert weights is not None, "weighted fields require (c1, c2)"
            c1, c2 = complex(weights[0]), complex(weights[1])
            if c1 == 0 and c2 == 0:
                raise DomainError("at least one weight must be non zero")
            weights = (c1, c2)
        else:
            weights = None
        self.kind = kind
        self.params = params
        self.weights = weights

    def __repr__(self):
        return "WaveField(kind={0!r}, model={1!r}, weights={2!r})".format(
            self.kind, self.params.model, self.weights
        )

    @property
    def support(self):
        """Closed y-interval outside of which the field vanishes identically."""
        if self.kind in ("restricted_upper", "image_neumann", "image_dirichlet"):
            return (0.0, math.inf)
        if self.kind == "restricted_lower":
            return (-math.inf, 0.0)
        return (-math.inf, math.inf)

    @property
    def domain_x_min(self):
        return 0.0 if self.params.model == "gaussian" else self.params.x_min

    def domain_check(self, x, y):
        """Raises DomainError for points outside the field's domain."""
        _check_x(self.params, x)
        if self.kind.startswith("image_") and np.any(np.asarray(y) < 0):
            raise DomainError("image fields are defined for y >= 0 only")

    def evaluate(self, x, y):
        """
        Evaluates the field.

        Args:
            x (float or array): abscissa
            y (float or array): ordinate

        Returns:
            field_sample: value and analytic gradient (d/dx, d/dy)
        """
        self.domain_check(x, y)
        first, second = _components(self.params, x, y)
        if self.kind == "one_slit_1":
            triple = first
        elif self.kind == "one_slit_2":
            triple = second
        elif self.kind in ("two_slit", "image_neumann"):
            triple = [f + s for f, s in zip(first, second)]
        elif self.kind == "image_dirichlet":
            triple = [s - f for f, s in zip(first, second)]
        elif self.kind == "weighted":
            c1, c2 = self.weights
            triple = [c1 * f + c2 * s for f, s in zip(first, second)]
        else:
            phi = [f + s for f, s in zip(first, second)]
            y = np.broadcast_to(np.asarray(y, dtype=float), phi[0].shape)
            if self.kind == "restricted_lower":
                outside = y > 0
            else:
                outside = y < 0
            on_line = y == 0
            triple = [
                np.where(outside, 0.0, np.where(on_line, v / 2.0, v)) for v in phi
            ]
        return _as_sample(triple)

    __call__ = evaluate

    def intensity(self, x, y):
        """|psi(x, y)| ** 2"""
        return np.abs(self.evaluate(x, y).value) ** 2

    def envelope_width(self, x):
        """
        Local transverse width: sigma |q(x)| for the gaussian model and the
        fringe period pi x / (k a) for the point model.
        """
        p = self.params
        if p.model == "gaussian":
            return p.sigma * abs(1.0 + 1j * x / (p.k * p.sigma ** 2))
        return fringe_period(p, x)

    def transverse_scale(self, x):
        return self.params.a + self.envelope_width(x)

    def axis_intensity(self, x):
        """|Psi_one(x, 0)| ** 2, the reference intensity of the node guard."""
        p = self.params
        if p.model == "gaussian":
            return 1.0 / abs(1.0 + 1j * x / (p.k * p.sigma ** 2))
        return 1.0 / x


def finite_difference_gradient(field, x, y, params=None):
    """
    Central difference gradient of any field with an `evaluate` method.

    The step is FD_STEP * max(1, |coordinate|) in each direction.

    Returns:
        tuple: (d_psi_dx, d_psi_dy)
    """
    step = _merged_params(params)["FD_STEP"]
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    hx = step * np.maximum(1.0, np.abs(x))
    hy = step * np.maximum(1.0, np.abs(y))
    d_dx = (field.evaluate(x + hx, y).value - field.evaluate(x - hx, y).value) / (
        2.0 * hx
    )
    d_dy = (field.evaluate(x, y + hy).value - field.evaluate(x, y - hy).value) / (
        2.0 * hy
    )
    return _squeeze(d_dx), _squeeze(d_dy)


def intensity_slice(field, L, y_grid):
    """
    Samples a field on the detection line x = L.

    Args:
        field (WaveField): field to sample
        L (float): detection abscissa
        y_grid (array): strictly increasing ordinates

    Returns:
        slice_sample: L, y_grid, intensity |psi| ** 2, complex amplitude and
        the physics_params of the field
    """
    y_grid = np.asarray(y_grid, dtype=float)
    if y_grid.ndim != 1 or y_grid.size == 0:
        raise DomainError("y_grid must be a non empty 1D array")
    if np.any(np.diff(y_grid) <= 0):
        raise DomainError("y_grid must be strictly increasing")
    amplitude = np.asarray(field.evaluate(L, y_grid).value, dtype=complex)
    amplitude = np.broadcast_to(amplitude, y_grid.shape).copy()
    intensity = amplitude.real ** 2 + amplitude.imag ** 2
    return slice_sample(
        L=L,
        y_grid=y_grid,
        intensity=intensity,
        amplitude=amplitude,
        physics=field.params,
    )
