#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Acceptance suite behind `slitlab verify`

    :license: MIT, see LICENSE.txt for more details

Every check runs on the desk configurations of slitlab.knowledge_base and
returns a record::

    {
        "name": "symmetry_current",
        "case": "gaussian",
        "passed": True,
        "value": 0.0,
        "tolerance": 1e-13,
        "details": {...},
    }

The suite is computed twice; the second pass only serves the determinism
check, which compares the canonical JSON of both passes byte for byte.
"""
from __future__ import absolute_import
import copy
import math
import numpy as np
from scipy.integrate import trapezoid
import slitlab
import slitlab.knowledge_base as kb
from slitlab.errors import SlitlabError
from slitlab.wavefield import (
    WaveField,
    field_sample,
    finite_difference_gradient,
    fringe_period,
    intensity_slice,
    make_params,
    one_slit_amplitude,
)
from slitlab.current import (
    fixed_step_oracle,
    integrate_trajectory,
    make_settings,
    ordering_check,
    probability_current,
    symmetric_family,
)
from slitlab.decomposition import (
    additivity_residuals,
    compare_patterns,
    default_window,
    image_field,
    split_two_slit,
    transmitted_flux,
)
from slitlab.ensembles import (
    ensemble_occupancy,
    hidden_pair_ensemble,
    launch_window,
)
from slitlab.duality import duality_report, duality_sweep, interference_deficit
from slitlab.results import payload_json

VERIFY_SEED = 1729

DEFICIT_GRID_POINTS = 20001

GRADIENT_INTENSITY_FLOOR = 1e-10


def _merged_params(params=None):
    merged = copy.deepcopy(slitlab.params)
    if params is not None:
        merged.update(params)
    return merged


def _record(name, case, value, tolerance, passed, **details):
    return {
        "name": name,
        "case": case,
        "passed": bool(passed),
        "value": value,
        "tolerance": tolerance,
        "details": details,
    }


def _desk(name, p):
    """(physics_params, L) of a desk configuration."""
    desk = kb.desk_configurations[name]
    physics = make_params(
        E=desk["E"],
        a=desk["a"],
        sigma=desk.get("sigma"),
        model=desk["model"],
        x_min=desk.get("xMin"),
        params=p,
    )
    return physics, desk["L"]


def _start_x(physics, L):
    """Default launch abscissa, 0 for gaussian and L / 10 for point beams."""
    if physics.model == "gaussian":
        return 0.0
    return max(L / 10.0, physics.x_min)


def check_symmetry_current(p, tolerances, sizes):
    """j_y vanishes on the symmetry line, relative to k |Phi| ** 2."""
    records = []
    for name in ("gaussian_k1", "gaussian", "point"):
        physics, L = _desk(name, p)
        field = WaveField("two_slit", physics)
        x = np.linspace(field.domain_x_min, L, sizes["symmetry_samples"])
        zeros = np.zeros_like(x)
        jy = np.abs(np.asarray(probability_current(field, x, zeros).jy))
        scale = physics.k * np.asarray(field.intensity(x, zeros))
        value = float(np.max(jy / scale))
        tolerance = tolerances["symmetry_current"]
        records.append(
            _record("symmetry_current", name, value, tolerance, value <= tolerance)
        )
    return records


def check_mirror_equivalence(p, tolerances, sizes):
    """
    The neumann image model reproduces Phi on y >= 0; the dirichlet model
    differs by 4 |psi_1(L, 0)| ** 2 on the mirror.
    """
    records = []
    for name in ("gaussian", "point"):
        physics, _ = _desk(name, p)
        for L in kb.desk_distances:
            if physics.model == "gaussian":
                half = default_window(physics, L, params=p)[1]
            else:
                half = physics.a + 2.0 * fringe_period(physics, L)
            y_upper = np.linspace(0.0, half, sizes["symmetry_samples"] + 1)
            phi = WaveField("two_slit", physics)
            peak = float(np.max(intensity_slice(phi, L, y_upper).intensity))
            neumann = compare_patterns(phi, image_field(physics, "neumann"), L, y_upper)
            value = neumann.max_abs_diff / peak
            tolerance = tolerances["mirror_equivalence"]
            records.append(
                _record(
                    "mirror_equivalence",
                    "{0} L={1:g}".format(name, L),
                    value,
                    tolerance,
                    value <= tolerance,
                    l2Diff=neumann.l2_diff,
                )
            )
            on_mirror = np.array([0.0])
            dirichlet = intensity_slice(image_field(physics, "dirichlet"), L, on_mirror)
            expected = 4.0 * abs(one_slit_amplitude(physics, 1, L, 0.0).value) ** 2
            contrast = float(phi.intensity(L, 0.0) - dirichlet.intensity[0])
            value = abs(contrast - expected) / expected
            tolerance = tolerances["dirichlet_contrast"]
            records.append(
                _record(
                    "dirichlet_contrast",
                    "{0} L={1:g}".format(name, L),
                    value,
                    tolerance,
                    value <= tolerance,
                    contrast=contrast,
                    expected=expected,
                )
            )
    return records


def check_additivity(p, tolerances, sizes):
    """Half plane norms add up to the two-slit norm."""
    records = []
    for name in ("gaussian_k1", "gaussian"):
        physics, _ = _desk(name, p)
        for L in kb.desk_distances:
            report = additivity_residuals(physics, L, params=p)
            value = abs(report.additivity_residual)
            tolerance = tolerances["additivity"]
            records.append(
                _record(
                    "additivity",
                    "{0} L={1:g}".format(name, L),
                    value,
                    tolerance,
                    value <= tolerance,
                    normTwoSlit=report.two_slit,
                    normLower=report.lower,
                    normUpper=report.upper,
                )
            )
    return records


def check_non_additivity(p, tolerances, sizes):
    """
    The interference deficit |Phi| ** 2 - |psi_1| ** 2 - |psi_2| ** 2
    integrates to 2 Re <psi_1|psi_2>, checked against a dense trapezoid rule
    of the overlap form, and is non zero.
    """
    records = []
    for name in ("gaussian_k1", "gaussian"):
        physics, L = _desk(name, p)
        lo, hi = default_window(physics, L, params=p)
        y_grid = np.linspace(lo, hi, DEFICIT_GRID_POINTS)
        integral = interference_deficit(physics, L, y_grid).integral
        y_oracle = np.linspace(lo, hi, sizes["trapezoid_oracle_points"])
        first = np.asarray(one_slit_amplitude(physics, 1, L, y_oracle).value)
        second = np.asarray(one_slit_amplitude(physics, 2, L, y_oracle).value)
        oracle = float(trapezoid(2.0 * (np.conj(first) * second).real, y_oracle))
        value = abs(integral - oracle) / abs(oracle) if oracle != 0 else math.inf
        tolerance = tolerances["deficit_oracle"]
        records.append(
            _record(
                "non_additivity",
                name,
                value,
                tolerance,
                value <= tolerance and integral != 0,
                deficitIntegral=integral,
                oracle=oracle,
                separationInWidths=physics.a / physics.sigma,
            )
        )
    return records


def _gaussian_family(p, sizes, verbose=False):
    physics, L = _desk("gaussian", p)
    field = WaveField("two_slit", physics)
    x0 = _start_x(physics, L)
    window = launch_window(physics, x0, margin=physics.a, params=p)
    family = symmetric_family(
        field,
        x0,
        sizes["trajectories_per_half_plane"],
        window,
        L,
        params=p,
        verbose=verbose,
    )
    return physics, L, x0, family


def check_confinement_and_ordering(p, tolerances, sizes, verbose=False):
    """
    Two-slit current lines stay in their launch half plane, the axis line
    stays on the axis and no two lines swap their order.
    """
    physics, L, x0, family = _gaussian_family(p, sizes, verbose=verbose)
    aborted = [t.status for t in family if not t.completed]
    abs_tol = max(t.abs_tol for t in family)
    violation = 0.0
    axis = 0.0
    for trajectory in family:
        if trajectory.start_y > 0:
            violation = max(violation, -float(np.min(trajectory.y)))
        elif trajectory.start_y < 0:
            violation = max(violation, float(np.max(trajectory.y)))
        else:
            axis = max(axis, float(np.max(np.abs(trajectory.y))))
    records = [
        _record(
            "confinement",
            "gaussian",
            violation,
            abs_tol,
            len(aborted) == 0 and violation <= abs_tol,
            trajectories=len(family),
            aborted=aborted,
        ),
        _record("axis_line", "gaussian", axis, abs_tol, axis <= abs_tol),
    ]
    if len(aborted) == 0:
        slices = np.linspace(x0, L, sizes["ordering_slices"] + 2)[1:-1]
        report = ordering_check(family, slices)
        records.append(
            _record(
                "ordering",
                "gaussian",
                0 if report.ok else 1,
                0,
                report.ok,
                firstViolation=report.first_violation,
                trajectories=len(family),
            )
        )
    else:
        records.append(
            _record("ordering", "gaussian", 1, 0, False, aborted=aborted)
        )
    return records


def check_integrator_accuracy(p, tolerances, sizes):
    """Adaptive endpoints against the refined fixed step RK4 reference."""
    records = []
    random_state = np.random.RandomState(VERIFY_SEED)
    for name in ("gaussian", "point"):
        physics, L = _desk(name, p)
        field = WaveField("one_slit_1", physics)
        x0 = _start_x(physics, L)
        settings = make_settings(field=field, x0=x0, x_end=L, params=p)
        lo, hi = launch_window(physics, x0, center=-physics.a, params=p)
        y0 = random_state.uniform(lo, hi, sizes["accuracy_launches"])
        ends = []
        aborted = []
        for start_y in y0:
            trajectory = integrate_trajectory(field, (x0, start_y), L, settings=settings)
            if trajectory.completed:
                ends.append((start_y, trajectory.y[-1]))
            else:
                aborted.append((float(start_y), trajectory.status))
        tolerance = tolerances["integrator_accuracy"]
        n_steps = int(math.ceil(p["ORACLE_REFINEMENT"] * (L - x0) / settings.max_step))
        if len(ends) == 0:
            records.append(
                _record(
                    "integrator_accuracy", name, None, tolerance, False, aborted=aborted
                )
            )
            continue
        starts, ends = np.array(ends).T
        oracle = fixed_step_oracle(field, (x0, starts), L, n_steps)
        scale = field.transverse_scale(L)
        value = float(np.max(np.abs(ends - oracle))) / scale
        records.append(
            _record(
                "integrator_accuracy",
                name,
                value,
                tolerance,
                value <= tolerance,
                oracleSteps=n_steps,
                launches=len(y0),
                aborted=aborted,
            )
        )
    return records


class _Envelope(object):
    """psi * exp(-i k x), the slowly varying part of a field."""

    def __init__(self, field):
        self.field = field
        self.k = field.params.k

    def evaluate(self, x, y):
        sample = self.field.evaluate(x, y)
        carrier = np.exp(-1j * self.k * np.asarray(x, dtype=float))
        return field_sample(
            value=sample.value * carrier,
            d_psi_dx=(sample.d_psi_dx - 1j * self.k * sample.value) * carrier,
            d_psi_dy=sample.d_psi_dy * carrier,
        )


def check_gradients(p, tolerances, sizes):
    """
    Analytic gradients against central differences.

    The differences are taken of the envelope psi * exp(-i k x); the carrier
    would otherwise dominate the truncation error at large x.
    """
    records = []
    random_state = np.random.RandomState(VERIFY_SEED + 1)
    n = sizes["gradient_points"]
    for name in ("gaussian_k1", "gaussian", "point"):
        physics, L = _desk(name, p)
        x = random_state.uniform(L / 10.0, L, n)
        for kind in ("one_slit_1", "two_slit"):
            field = WaveField(kind, physics)
            reach = physics.a + np.asarray(field.envelope_width(x))
            y = random_state.uniform(-1.0, 1.0, n) * reach
            envelope = _Envelope(field)
            analytic = envelope.evaluate(x, y)
            fd_dx, fd_dy = finite_difference_gradient(envelope, x, y, params=p)
            full = field.evaluate(x, y)
            intensity = np.abs(full.value) ** 2
            mask = intensity > GRADIENT_INTENSITY_FLOOR * np.max(intensity)
            scale = physics.k * np.abs(full.value) + np.sqrt(
                np.abs(full.d_psi_dx) ** 2 + np.abs(full.d_psi_dy) ** 2
            )
            error = np.maximum(
                np.abs(fd_dx - analytic.d_psi_dx), np.abs(fd_dy - analytic.d_psi_dy)
            )
            value = float(np.max(error[mask] / scale[mask]))
            tolerance = tolerances["gradient"]
            records.append(
                _record(
                    "gradient",
                    "{0} {1}".format(name, kind),
                    value,
                    tolerance,
                    value <= tolerance,
                    points=int(np.sum(mask)),
                )
            )
    return records


def check_tangent_swap(p, tolerances, sizes, verbose=False):
    """
    Tangent swapping keeps the position multiset of every pair, confines
    both lines to their half planes and gives (n, n) occupancy everywhere.
    """
    physics, L = _desk("gaussian", p)
    x0 = _start_x(physics, L)
    ensemble = hidden_pair_ensemble(
        physics, sizes["swap_pairs"], x0, L, params=p, verbose=verbose
    )
    swapped = ensemble.swapped()
    multiset_ok = True
    confined = True
    for pair, swap in zip(ensemble, swapped):
        on_grid = np.isin(swap.lower.x, pair.x)
        lower, upper = swap.lower.y[on_grid], swap.upper.y[on_grid]
        before = np.sort(np.column_stack([pair.traj1.y, pair.traj2.y]), axis=1)
        after = np.sort(np.column_stack([lower, upper]), axis=1)
        multiset_ok = multiset_ok and bool(np.array_equal(before, after))
        confined = (
            confined
            and bool(np.all(swap.lower.y <= 0))
            and bool(np.all(swap.upper.y >= 0))
        )
    n = len(ensemble)
    slices = np.linspace(x0, L, sizes["swap_slices"])
    occupancy = ensemble_occupancy(swapped, slices)
    unbalanced = [x for x, counts in occupancy.items() if counts != (n, n)]
    crossings = int(sum(len(pair.crossings) for pair in ensemble))
    return [
        _record(
            "swap_multiset",
            "gaussian",
            0 if multiset_ok else 1,
            0,
            multiset_ok and n > 0,
            pairs=n,
            excluded=len(ensemble.excluded),
            crossings=crossings,
        ),
        _record("swap_confinement", "gaussian", 0 if confined else 1, 0, confined),
        _record(
            "swap_occupancy",
            "gaussian",
            len(unbalanced),
            0,
            len(unbalanced) == 0,
            slices=len(slices),
        ),
    ]


def _duality_grid(physics, L, points):
    half = 2.0 * fringe_period(physics, L)
    return np.linspace(-half, half, points)


def check_duality(p, tolerances, sizes, verbose=False):
    """
    Exact (P, V) of the point model for two splits and P ** 2 + V ** 2 <= 1
    over the weight sweep; the gaussian sweep runs in the far field.
    """
    records = []
    tolerance = tolerances["duality"]
    physics, L = _desk("point", p)
    y_grid = _duality_grid(physics, L, sizes["duality_grid_points"])
    for share, (P_expected, V_expected) in sorted(kb.duality_splits.items()):
        report = duality_report(
            physics, math.sqrt(share), math.sqrt(1.0 - share), L, y_grid, params=p
        )
        value = max(
            abs(report.P - P_expected),
            abs(report.V - V_expected),
            abs(report.duality_sum - (P_expected ** 2 + V_expected ** 2)),
        )
        records.append(
            _record(
                "duality_split",
                "point |c1|^2={0:g}".format(share),
                value,
                tolerance,
                value <= tolerance,
                P=report.P,
                V=report.V,
            )
        )
    sweeps = (("point", L), ("gaussian", kb.duality_far_field))
    for name, distance in sweeps:
        physics, _ = _desk(name, p)
        y_grid = _duality_grid(physics, distance, sizes["duality_grid_points"])
        reports = duality_sweep(
            physics, kb.weight_sweep, distance, y_grid, params=p, verbose=verbose
        )
        value = max(r.duality_sum for r in reports)
        records.append(
            _record(
                "duality_bound",
                "{0} L={1:g}".format(name, distance),
                value,
                1.0 + tolerance,
                value <= 1.0 + tolerance,
                sums=[r.duality_sum for r in reports],
            )
        )
    return records


def check_flux_conservation(p, tolerances, sizes):
    """Flux through the lower half of the detection line does not depend on L."""
    physics, _ = _desk("gaussian", p)
    lower = split_two_slit(physics).lower
    fluxes = [
        transmitted_flux(lower, L, window=default_window(physics, L, params=p), params=p)
        for L in kb.conservation_distances
    ]
    reference = fluxes[0]
    value = max(abs(f - reference) for f in fluxes) / abs(reference)
    tolerance = tolerances["flux_conservation"]
    return [
        _record(
            "flux_conservation",
            "gaussian",
            value,
            tolerance,
            value <= tolerance,
            distances=list(kb.conservation_distances),
            fluxes=fluxes,
        )
    ]


CHECKS = (
    ("symmetry_current", check_symmetry_current, False),
    ("mirror_equivalence", check_mirror_equivalence, False),
    ("additivity", check_additivity, False),
    ("non_additivity", check_non_additivity, False),
    ("confinement_and_ordering", check_confinement_and_ordering, True),
    ("integrator_accuracy", check_integrator_accuracy, False),
    ("gradient", check_gradients, False),
    ("tangent_swap", check_tangent_swap, True),
    ("duality", check_duality, True),
    ("flux_conservation", check_flux_conservation, False),
)


def _run_checks(p, tolerances, sizes, verbose=False):
    records = []
    for name, check, takes_verbose in CHECKS:
        try:
            if takes_verbose:
                found = check(p, tolerances, sizes, verbose=verbose)
            else:
                found = check(p, tolerances, sizes)
        except SlitlabError as error:
            found = [
                _record(
                    name,
                    "error",
                    None,
                    None,
                    False,
                    error=error.__class__.__name__,
                    reason=str(error),
                )
            ]
        if verbose:
            for record in found:
                print(
                    "> {0:<22} {1:<24} {2} value={3}".format(
                        record["name"],
                        record["case"],
                        "PASS" if record["passed"] else "FAIL",
                        record["value"],
                    )
                )
        records.extend(found)
    return records


def run_verification(config=None, params=None, verbose=False):
    """
    Runs the acceptance suite on the desk configurations.

    Keyword Arguments:
        config (Config): only its tolerancesOverride is used
        params (dict): parameter overrides, ignored if config is given
        verbose (bool): print one line per check

    Returns:
        dict: {"passed": bool, "checks": [record, ...]}, the last record is
        the determinism check of the suite itself
    """
    p = config.params if config is not None else _merged_params(params)
    tolerances = kb.acceptance_tolerances
    sizes = kb.acceptance_sizes
    first = _run_checks(p, tolerances, sizes, verbose=verbose)
    if verbose:
        print("> Repeating the suite for the determinism check")
    second = _run_checks(p, tolerances, sizes)
    identical = payload_json(first) == payload_json(second)
    first.append(
        _record(
            "determinism", "verify", 0 if identical else 1, 0, identical
        )
    )
    return {"passed": all(r["passed"] for r in first), "checks": first}
