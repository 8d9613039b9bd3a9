#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Symmetry line decomposition of the two-slit field, norm and flux
    accounting on the detection line and the method of images mirror
    experiment

    :license: MIT, see LICENSE.txt for more details

The two-slit field Phi splits along the symmetry line y = 0 into two half
plane substates with disjoint supports (restricted_lower / restricted_upper,
each carrying Phi / 2 on the line itself). Their squared norms add up to the
norm of Phi, whereas the squared norms of the one-slit fields do not: the
difference is the interference term 2 Re <psi_1|psi_2>.
"""
from __future__ import absolute_import
from collections import namedtuple
import copy
import math
import numpy as np
from scipy.integrate import quad, trapezoid
import slitlab
from slitlab.errors import DomainError, QuadratureError
from slitlab.wavefield import WaveField, intensity_slice
from slitlab.current import probability_current

decomposed_state = namedtuple("decomposed_state", ["lower", "upper"])

flux_record = namedtuple(
    "flux_record", ["L", "lower_flux", "upper_flux", "total_flux", "symmetry_line_flux"]
)

norm_report = namedtuple(
    "norm_report",
    [
        "L",
        "window",
        "two_slit",
        "lower",
        "upper",
        "one_slit_1",
        "one_slit_2",
        "additivity_residual",
        "non_additivity",
        "overlap_term",
    ],
)

pattern_comparison = namedtuple("pattern_comparison", ["max_abs_diff", "l2_diff"])

BOUNDARIES = ("neumann", "dirichlet")


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def split_two_slit(params):
    """
    Half plane decomposition of the two-slit field.

    Args:
        params (physics_params): physics parameters

    Returns:
        decomposed_state: (lower, upper) restricted WaveFields, lower + upper
        reproduces Phi everywhere, including Phi / 2 + Phi / 2 on y = 0
    """
    return decomposed_state(
        lower=WaveField(kind="restricted_lower", params=params),
        upper=WaveField(kind="restricted_upper", params=params),
    )


def default_window(physics, L, params=None):
    """
    Symmetric detection window +-(a + CUTOFF_WIDTHS * sigma * |q(L)|) of the
    gaussian model. Intensities outside are below exp(-CUTOFF_WIDTHS ** 2)
    of the on-axis value.

    Raises:
        DomainError: for the point model, its full line norms diverge
    """
    if physics.model != "gaussian":
        raise DomainError("point model norms require an explicit finite window")
    widths = _merged_params(params)["CUTOFF_WIDTHS"]
    half = physics.a + widths * physics.sigma * abs(
        1.0 + 1j * L / (physics.k * physics.sigma ** 2)
    )
    return (-half, half)


def _resolve_window(field, L, window, side="both", params=None):
    """(lo, hi) of window intersected with side and field support, or None."""
    if window is None:
        window = default_window(field.params, L, params=params)
    lo, hi = float(window[0]), float(window[1])
    if math.isnan(lo) or math.isnan(hi) or not lo < hi:
        raise DomainError("invalid window ({0}, {1})".format(lo, hi))
    if field.params.model == "point" and not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("point model norms require an explicit finite window")
    if side == "lower":
        hi = min(hi, 0.0)
    elif side == "upper":
        lo = max(lo, 0.0)
    support = field.support
    lo, hi = max(lo, support[0]), min(hi, support[1])
    if not lo < hi:
        return None
    return lo, hi


def _quad(integrand, lo, hi, field, p, epsabs=0.0):
    kwargs = {"epsabs": epsabs, "epsrel": p["QUAD_EPSREL"], "limit": p["QUAD_LIMIT"]}
    if math.isfinite(lo) and math.isfinite(hi):
        breaks = [b for b in (-field.params.a, 0.0, field.params.a) if lo < b < hi]
        if breaks:
            kwargs["points"] = breaks
    result = quad(integrand, lo, hi, full_output=1, **kwargs)
    if len(result) > 3:
        raise QuadratureError(
            "quadrature on ({0}, {1}) missed epsrel {2}: {3}".format(
                lo, hi, p["QUAD_EPSREL"], result[3].splitlines()[0]
            )
        )
    return result[0]


def windowed_norm(field, L, window=None, params=None):
    """
    Squared norm of a field on the detection line restricted to a window.

    Adaptive Gauss-Kronrod quadrature (QUADPACK) with target relative error
    QUAD_EPSREL over the window intersected with the field's support.

    Args:
        field (WaveField): field
        L (float): detection abscissa
        window (tuple): (ymin, ymax); None selects `default_window`, the
            gaussian model full line surrogate

    Returns:
        float: integral of |field(L, y)| ** 2 over the window

    Raises:
        QuadratureError: if the error target is not met
        DomainError: point model with unbounded window
    """
    p = _merged_params(params)
    bounds = _resolve_window(field, L, window, params=p)
    if bounds is None:
        return 0.0
    return _quad(lambda y: field.intensity(L, y), bounds[0], bounds[1], field, p)


def overlap_integral(field_a, field_b, L, window=None, params=None):
    """
    Windowed inner product <a|b> = integral of conj(a) * b at x = L.

    The absolute error target is QUAD_EPSREL times the Cauchy-Schwarz bound
    sqrt(|a| ** 2 |b| ** 2), nearly orthogonal fields have overlaps far below
    their integrands.

    Returns:
        complex: overlap
    """
    p = _merged_params(params)
    bounds_a = _resolve_window(field_a, L, window, params=p)
    bounds_b = _resolve_window(field_b, L, window, params=p)
    if bounds_a is None or bounds_b is None:
        return 0j
    lo, hi = max(bounds_a[0], bounds_b[0]), min(bounds_a[1], bounds_b[1])
    if not lo < hi:
        return 0j

    def product(y):
        return np.conj(field_a.evaluate(L, y).value) * field_b.evaluate(L, y).value

    scale = math.sqrt(
        windowed_norm(field_a, L, (lo, hi), p) * windowed_norm(field_b, L, (lo, hi), p)
    )
    epsabs = p["QUAD_EPSREL"] * scale
    real = _quad(lambda y: product(y).real, lo, hi, field_a, p, epsabs=epsabs)
    imag = _quad(lambda y: product(y).imag, lo, hi, field_a, p, epsabs=epsabs)
    return complex(real, imag)


def additivity_residuals(physics, L, window=None, params=None):
    """
    Norm bookkeeping of the two decompositions of Phi.

    The half plane split is additive: additivity_residual is
    (|lower| ** 2 + |upper| ** 2 - |Phi| ** 2) / |Phi| ** 2 and vanishes up to
    quadrature error. The slit split is not: non_additivity is
    |Phi| ** 2 - |psi_1| ** 2 - |psi_2| ** 2, which equals overlap_term
    2 Re <psi_1|psi_2>.

    Returns:
        norm_report: named tuple
    """
    if window is None:
        window = default_window(physics, L, params=params)
    state = split_two_slit(physics)
    norms = {
        "two_slit": windowed_norm(WaveField("two_slit", physics), L, window, params),
        "lower": windowed_norm(state.lower, L, window, params),
        "upper": windowed_norm(state.upper, L, window, params),
        "one_slit_1": windowed_norm(WaveField("one_slit_1", physics), L, window, params),
        "one_slit_2": windowed_norm(WaveField("one_slit_2", physics), L, window, params),
    }
    overlap = overlap_integral(
        WaveField("one_slit_1", physics),
        WaveField("one_slit_2", physics),
        L,
        window,
        params,
    )
    return norm_report(
        L=L,
        window=tuple(window),
        additivity_residual=(norms["lower"] + norms["upper"] - norms["two_slit"])
        / norms["two_slit"],
        non_additivity=norms["two_slit"] - norms["one_slit_1"] - norms["one_slit_2"],
        overlap_term=2.0 * overlap.real,
        **norms
    )


def symmetry_line_flux(physics, x_range, n=None, field=None, params=None):
    """
    Integral of j_y(x, 0) over x_range, the current through the symmetry line.

    Composite Gauss-Legendre quadrature with n panels (default FLUX_PANELS)
    of FLUX_PANEL_ORDER nodes each; the fixed node set makes the result
    reproducible bit for bit.

    Args:
        physics (physics_params): physics parameters
        x_range (tuple): (x1, x2), x1 < x2 inside the model domain
        n (int): number of panels
        field (WaveField): defaults to the two-slit field of `physics`

    Returns:
        float: flux, zero for the two-slit field. The one_slit_1 field alone
        pushes probability away from its slit at y = -a, i.e. towards +y,
        and gives a positive value; one_slit_2 the exact negative.
    """
    p = _merged_params(params)
    if n is None:
        n = p["FLUX_PANELS"]
    x1, x2 = float(x_range[0]), float(x_range[1])
    if not x1 < x2:
        raise DomainError("require x1 < x2, got ({0}, {1})".format(x1, x2))
    if n < 1:
        raise DomainError("require n >= 1 panels, got {0}".format(n))
    if field is None:
        field = WaveField(kind="two_slit", params=physics)
    nodes, weights = np.polynomial.legendre.leggauss(p["FLUX_PANEL_ORDER"])
    edges = np.linspace(x1, x2, n + 1)
    half = np.diff(edges) / 2.0
    centers = (edges[:-1] + edges[1:]) / 2.0
    x = centers[:, None] + half[:, None] * nodes[None, :]
    jy = np.asarray(probability_current(field, x, np.zeros_like(x)).jy)
    return float(np.sum(np.sum(jy * weights[None, :], axis=1) * half))


def transmitted_flux(field, L, side="both", window=None, params=None):
    """
    Probability flux through the detection line, integral of j_x(L, y) over
    the requested half of the window.

    Args:
        field (WaveField): field
        L (float): detection abscissa
        side (str): 'lower', 'upper' or 'both'
        window (tuple): (ymin, ymax), see `windowed_norm`

    Returns:
        float: flux
    """
    assert side in ("lower", "upper", "both"), "unknown side {0}".format(side)
    p = _merged_params(params)
    bounds = _resolve_window(field, L, window, side=side, params=p)
    if bounds is None:
        return 0.0
    return _quad(
        lambda y: probability_current(field, L, y).jx, bounds[0], bounds[1], field, p
    )


def flux_report(physics, L, window=None, params=None):
    """
    Transmitted flux of Phi per half plane at x = L and the symmetry line
    flux over (domain start, L).

    Returns:
        flux_record: (L, lower_flux, upper_flux, total_flux, symmetry_line_flux)
    """
    field = WaveField(kind="two_slit", params=physics)
    lower = transmitted_flux(field, L, "lower", window, params)
    upper = transmitted_flux(field, L, "upper", window, params)
    line = symmetry_line_flux(physics, (field.domain_x_min, L), params=params)
    return flux_record(
        L=L,
        lower_flux=lower,
        upper_flux=upper,
        total_flux=lower + upper,
        symmetry_line_flux=line,
    )


def image_field(physics, boundary):
    """
    Method of images model of a two-sided mirror on y = 0 with only slit 2
    physical, defined on y >= 0.

    neumann (elastic mirror, zero normal derivative) adds the image source,
    dirichlet (hard node) subtracts it. The neumann field is algebraically
    the two-slit field.

    Returns:
        WaveField: kind image_neumann or image_dirichlet
    """
    if boundary not in BOUNDARIES:
        raise DomainError(
            "boundary must be one of {0}, got {1}".format(BOUNDARIES, boundary)
        )
    return WaveField(kind="image_" + boundary, params=physics)


def compare_patterns(field_a, field_b, L, y_grid):
    """
    Compares the intensity patterns of two fields on the detection line.

    Returns:
        pattern_comparison: max |I_a - I_b| and the L2 norm of I_a - I_b
        (trapezoid rule on y_grid)
    """
    a = intensity_slice(field_a, L, y_grid)
    b = intensity_slice(field_b, L, y_grid)
    diff = a.intensity - b.intensity
    if diff.size > 1:
        l2 = math.sqrt(trapezoid(diff ** 2, a.y_grid))
    else:
        l2 = 0.0
    return pattern_comparison(max_abs_diff=float(np.max(np.abs(diff))), l2_diff=l2)
