#! /usr/bin/env python
# -*- coding: utf-8 -*-
# encoding: utf-8
"""
    slitlab
    -------

    Numerical laboratory for stationary two-slit wave fields, probability
    current lines and their ensembles

    :license: MIT, see LICENSE.txt for more details

"""
# """
# The params holds all numerical parameters required for slitlab.

# """

from collections import OrderedDict as odict

params = {
    "NODE_FLOOR": 1e-10,
    # ^-- abort a current line once |psi|^2 drops below NODE_FLOOR times the
    # intensity at its launch point
    "REL_TOL": 1e-8,
    "ABS_TOL_SCALE": 1e-10,
    # ^-- absolute tolerance is ABS_TOL_SCALE * transverse scale of the field
    "MAX_STEP_FRACTION": 1e-2,
    "FD_STEP": 1e-5,
    "X_MIN_FACTOR": 1e-2,
    # point model: xMin = X_MIN_FACTOR * k * sigma ** 2 unless given
    "LAUNCH_GRID_POINTS": 4096,
    "RESAMPLE_POINTS": 512,
    "QUAD_EPSREL": 1e-10,
    "QUAD_LIMIT": 500,
    "CUTOFF_WIDTHS": 8,
    "LAUNCH_WIDTHS": 1.0,
    # ^-- launch windows reach LAUNCH_WIDTHS envelope widths past the slit
    # centers; lines launched further out steepen until j_x < 0 (paraxial
    # fields) and end in backflow_abort
    "MIN_POINTS_PER_FRINGE": 16,
    "CROSSING_TOLERANCE": 1e-10,
    "FLUX_PANELS": 200,
    "FLUX_PANEL_ORDER": 8,
    "ORACLE_REFINEMENT": 10,
    "CSV_FLOAT_FORMAT": "{0:.17g}",
    "SVG_HASH_SALT": "slitlab",
}

params_descriptions = odict(
    [
        (
            "integration",
            [
                {
                    "description": """Relative tolerance of the adaptive
Dormand-Prince 4(5) integrator used for Bohmian trajectories / current lines""",
                    "default": params["REL_TOL"],
                    "key": "REL_TOL",
                },
                {
                    "description": """Absolute tolerance of the trajectory
integrator, expressed as a fraction of the transverse scale of the field at
the end of the integration range""",
                    "default": params["ABS_TOL_SCALE"],
                    "key": "ABS_TOL_SCALE",
                },
                {
                    "description": """Maximal step of the trajectory integrator
as fraction of the integration range (xEnd - x0)""",
                    "default": params["MAX_STEP_FRACTION"],
                    "key": "MAX_STEP_FRACTION",
                },
                {
                    "description": """Trajectories are aborted (status
node_abort) when the local intensity falls below this fraction of the launch
intensity. The velocity field diverges at nodes of the wave function""",
                    "default": params["NODE_FLOOR"],
                    "key": "NODE_FLOOR",
                },
                {
                    "description": """Refinement factor of the fixed step RK4
reference integrator relative to the maximal adaptive step""",
                    "default": params["ORACLE_REFINEMENT"],
                    "key": "ORACLE_REFINEMENT",
                },
            ],
        ),
        (
            "sampling_and_quadrature",
            [
                {
                    "description": """Relative step of the central finite
difference gradient, h = FD_STEP * max(1, |coordinate|)""",
                    "default": params["FD_STEP"],
                    "key": "FD_STEP",
                },
                {
                    "description": """Default minimal evaluation abscissa of the
point (Fresnel kernel) model as fraction of k * sigma ** 2""",
                    "default": params["X_MIN_FACTOR"],
                    "key": "X_MIN_FACTOR",
                },
                {
                    "description": """Number of grid points used to build the
cumulative intensity distribution for quantile launches""",
                    "default": params["LAUNCH_GRID_POINTS"],
                    "key": "LAUNCH_GRID_POINTS",
                },
                {
                    "description": """Number of uniform x samples mirror pairs
are resampled to""",
                    "default": params["RESAMPLE_POINTS"],
                    "key": "RESAMPLE_POINTS",
                },
                {
                    "description": """Target relative error of the adaptive
Gauss-Kronrod quadrature""",
                    "default": params["QUAD_EPSREL"],
                    "key": "QUAD_EPSREL",
                },
                {
                    "description": """Maximal number of subintervals of the
adaptive Gauss-Kronrod quadrature""",
                    "default": params["QUAD_LIMIT"],
                    "key": "QUAD_LIMIT",
                },
                {
                    "description": """Full line norms of the gaussian model are
truncated at center + CUTOFF_WIDTHS local widths""",
                    "default": params["CUTOFF_WIDTHS"],
                    "key": "CUTOFF_WIDTHS",
                },
                {
                    "description": """Half width of trajectory launch windows
in local envelope widths (sigma |q(x0)| gaussian, pi x0 / (k a) point) beyond
the slit centers. Both field models are paraxial: lines launched far off a
slit center steepen until the forward current vanishes""",
                    "default": params["LAUNCH_WIDTHS"],
                    "key": "LAUNCH_WIDTHS",
                },
                {
                    "description": """Number of panels of the composite
Gauss-Legendre rule for the symmetry line flux""",
                    "default": params["FLUX_PANELS"],
                    "key": "FLUX_PANELS",
                },
                {
                    "description": """Gauss-Legendre nodes per panel of the
symmetry line flux quadrature""",
                    "default": params["FLUX_PANEL_ORDER"],
                    "key": "FLUX_PANEL_ORDER",
                },
            ],
        ),
        (
            "analysis",
            [
                {
                    "description": """Minimal number of grid points per
expected fringe period required for visibility estimates""",
                    "default": params["MIN_POINTS_PER_FRINGE"],
                    "key": "MIN_POINTS_PER_FRINGE",
                },
                {
                    "description": """Refined crossings satisfy |y(x*)| below
CROSSING_TOLERANCE times the transverse scale""",
                    "default": params["CROSSING_TOLERANCE"],
                    "key": "CROSSING_TOLERANCE",
                },
            ],
        ),
        (
            "internal",
            [
                {
                    "description": """Format string for floats written to CSV
files, 17 significant digits round trip exactly""",
                    "default": params["CSV_FLOAT_FORMAT"],
                    "key": "CSV_FLOAT_FORMAT",
                },
                {
                    "description": """Hash salt of matplotlib SVG output, fixed
so that plots are reproducible byte by byte""",
                    "default": params["SVG_HASH_SALT"],
                    "key": "SVG_HASH_SALT",
                },
            ],
        ),
    ]
)
