#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Numerical laboratory for the symmetric two-slit experiment: stationary
    one- and two-slit wave fields, the symmetry line decomposition, current
    lines and their pairings, and wave-particle duality diagnostics

    :license: MIT, see LICENSE.txt for more details

"""
from __future__ import absolute_import
import sys
import os
from packaging.version import parse as parse_version

__version_str__ = (
    open(os.path.join(os.path.dirname(__file__), "version.txt")).readline().strip()
)
__version__ = parse_version(__version_str__)

if not hasattr(sys, "version_info") or sys.version_info < (3, 8):
    raise RuntimeError("slitlab requires Python 3.8 or later.")

# params must be bound before the submodules, they read slitlab.params lazily
from .params import params
from . import knowledge_base
from .errors import (
    SlitlabError,
    DomainError,
    NodeError,
    QuadratureError,
    ResolutionError,
    ConfigError,
)
from .wavefield import (
    make_params,
    physics_params,
    field_sample,
    slice_sample,
    fringe_period,
    one_slit_amplitude,
    two_slit_amplitude,
    weighted_amplitude,
    WaveField,
    finite_difference_gradient,
    intensity_slice,
)
from .current import (
    current_vector,
    integrator_settings,
    make_settings,
    probability_current,
    bohmian_velocity,
    Trajectory,
    integrate_trajectory,
    integrate_family,
    symmetric_family,
    fixed_step_oracle,
    launch_grid,
    ordering_check,
    flux_tube_gaps,
)
from .decomposition import (
    decomposed_state,
    flux_record,
    norm_report,
    pattern_comparison,
    split_two_slit,
    default_window,
    windowed_norm,
    overlap_integral,
    additivity_residuals,
    symmetry_line_flux,
    transmitted_flux,
    flux_report,
    image_field,
    compare_patterns,
)
from .ensembles import (
    endpoint_comparison,
    launch_window,
    MirrorPair,
    SwappedPair,
    PairEnsemble,
    hidden_pair_ensemble,
    detect_crossings,
    tangent_swap,
    ensemble_occupancy,
    cross_check_mirror,
    endpoint_discrepancy,
)
from .duality import (
    duality_record,
    deficit,
    normalized_weights,
    predictability,
    visibility,
    duality_report,
    interference_deficit,
    duality_sweep,
    deficit_decay,
)
from .adaptors import Config, load_config, default_config
from .results import Results
from .commands import run_command
from .verification import run_verification

del sys
