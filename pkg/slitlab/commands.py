#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    The subcommands of the `slitlab` command line tool

    :license: MIT, see LICENSE.txt for more details

Every command computes a JSON compatible payload from a Config, stores it in
a Results container and writes its files. Payloads contain no timestamps and
are computed serially in a fixed order, so repeated runs write identical
bytes apart from the metadata block of JSON files.
"""
from __future__ import absolute_import
import numpy as np
from slitlab.wavefield import WaveField, intensity_slice
from slitlab.current import (
    make_settings,
    ordering_check,
    symmetric_family,
)
from slitlab.decomposition import (
    additivity_residuals,
    compare_patterns,
    flux_report,
    image_field,
)
from slitlab.ensembles import (
    endpoint_discrepancy,
    ensemble_occupancy,
    hidden_pair_ensemble,
    launch_window,
)
from slitlab.duality import duality_sweep
from slitlab.results import Results
from slitlab.verification import run_verification

COMMANDS = ("pattern", "trajectories", "decompose", "mirror", "swap", "duality", "verify")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

OCCUPANCY_SLICES = 16

ORDERING_SLICES = 32


def _pattern(config, results, out_dir):
    physics = config.physics
    y_grid = config.y_grid
    c1, c2 = config.weight_pairs[0]
    fields = {
        "one_slit_1": WaveField("one_slit_1", physics),
        "one_slit_2": WaveField("one_slit_2", physics),
        "two_slit": WaveField("two_slit", physics),
        "weighted": WaveField("weighted", physics, weights=(c1, c2)),
    }
    samples = {}
    for kind, field in sorted(fields.items()):
        sample = intensity_slice(field, config["L"], y_grid)
        samples[kind] = sample
        results.add(
            "pattern",
            kind,
            {
                "peakIntensity": float(np.max(sample.intensity)),
                "symmetryResidual": float(
                    np.max(np.abs(sample.intensity - sample.intensity[::-1]))
                ),
            },
        )
        if out_dir is not None:
            results.write_pattern_csv(
                results.output_path(out_dir, "pattern_{0}.csv".format(kind)), sample
            )
    if out_dir is not None:
        results.plot_pattern_svg(results.output_path(out_dir, "pattern.svg"), samples)
        results.write_json(results.output_path(out_dir, "pattern.json"), "pattern")
    return EXIT_OK


def _trajectories(config, results, out_dir):
    physics = config.physics
    t = config["trajectories"]
    field = WaveField("two_slit", physics)
    window = launch_window(physics, t["x0"], margin=physics.a, params=config.params)
    family = symmetric_family(
        field,
        t["x0"],
        t["n"],
        window,
        t["xEnd"],
        settings=config.integrator_settings(),
        params=config.params,
        verbose=results.verbose,
    )
    statuses = {}
    for trajectory in family:
        statuses[trajectory.status] = statuses.get(trajectory.status, 0) + 1
    completed = [traj for traj in family if traj.completed]
    payload = {
        "count": len(family),
        "statuses": statuses,
        # None when no line qualifies
        "confinementMin": min(
            (float(np.min(np.sign(tr.start_y) * tr.y)) for tr in completed if tr.start_y != 0),
            default=None,
        ),
        "axisMaxDeviation": max(
            (float(np.max(np.abs(tr.y))) for tr in completed if tr.start_y == 0),
            default=None,
        ),
    }
    if len(completed) == len(family):
        slices = np.linspace(t["x0"], t["xEnd"], ORDERING_SLICES + 2)[1:-1]
        report = ordering_check(completed, slices)
        payload["orderingOk"] = report.ok
        payload["orderingFirstViolation"] = report.first_violation
    results.add("trajectories", "family", payload)
    if out_dir is not None:
        results.write_trajectories_csv(
            results.output_path(out_dir, "trajectories.csv"), family
        )
        results.plot_trajectories_svg(
            results.output_path(out_dir, "trajectories.svg"), family
        )
        results.write_json(results.output_path(out_dir, "trajectories.json"), "trajectories")
    return EXIT_OK


def _decompose(config, results, out_dir):
    physics = config.physics
    window = tuple(config["yWindow"])
    norms = additivity_residuals(physics, config["L"], window, params=config.params)
    fluxes = flux_report(physics, config["L"], window, params=config.params)
    results.add(
        "decompose",
        "norms",
        {
            "window": list(norms.window),
            "normTwoSlit": norms.two_slit,
            "normLower": norms.lower,
            "normUpper": norms.upper,
            "normOneSlit1": norms.one_slit_1,
            "normOneSlit2": norms.one_slit_2,
            "additivityResidual": norms.additivity_residual,
            "nonAdditivity": norms.non_additivity,
            "overlapTerm": norms.overlap_term,
        },
    )
    results.add(
        "decompose",
        "flux",
        {
            "L": fluxes.L,
            "lowerFlux": fluxes.lower_flux,
            "upperFlux": fluxes.upper_flux,
            "totalFlux": fluxes.total_flux,
            "symmetryLineFlux": fluxes.symmetry_line_flux,
        },
    )
    if out_dir is not None:
        results.write_json(results.output_path(out_dir, "decompose.json"), "decompose")
    return EXIT_OK


def _mirror(config, results, out_dir):
    physics = config.physics
    y_upper = np.linspace(0.0, max(config["yWindow"][1], 0.0), config["gridN"])
    if not y_upper[-1] > 0:
        y_upper = np.linspace(0.0, abs(config["yWindow"][0]), config["gridN"])
    phi = WaveField("two_slit", physics)
    peak = float(np.max(intensity_slice(phi, config["L"], y_upper).intensity))
    for boundary in ("neumann", "dirichlet"):
        image = image_field(physics, boundary)
        comparison = compare_patterns(phi, image, config["L"], y_upper)
        results.add(
            "mirror",
            boundary,
            {
                "maxAbsDiff": comparison.max_abs_diff,
                "l2Diff": comparison.l2_diff,
                "relativeMaxAbsDiff": comparison.max_abs_diff / peak,
            },
        )
        if out_dir is not None:
            results.write_pattern_csv(
                results.output_path(out_dir, "mirror_{0}.csv".format(boundary)),
                intensity_slice(image, config["L"], y_upper),
                command="mirror",
            )
    if out_dir is not None:
        results.write_json(results.output_path(out_dir, "mirror.json"), "mirror")
    return EXIT_OK


def _swap(config, results, out_dir):
    physics = config.physics
    t = config["trajectories"]
    ensemble = hidden_pair_ensemble(
        physics,
        t["n"],
        t["x0"],
        t["xEnd"],
        settings=config.integrator_settings(),
        params=config.params,
        verbose=results.verbose,
    )
    swapped = ensemble.swapped()
    slices = np.linspace(t["x0"], t["xEnd"], OCCUPANCY_SLICES)
    raw = ensemble_occupancy(ensemble, slices)
    relabelled = ensemble_occupancy(swapped, slices)
    payload = {
        "pairs": len(ensemble),
        "excluded": [
            {"start": list(start), "status": status} for start, status in ensemble.excluded
        ],
        "crossings": {str(pair.pair_id): pair.crossings for pair in ensemble},
        "netSignedCrossings": sum(pair.net_signed_crossings() for pair in ensemble),
        "occupancyRaw": [[x, list(counts)] for x, counts in raw.items()],
        "occupancySwapped": [[x, list(counts)] for x, counts in relabelled.items()],
    }
    if len(ensemble) > 0:
        comparison = endpoint_discrepancy(
            ensemble,
            physics,
            settings=make_settings(
                field=WaveField("two_slit", physics),
                x0=t["x0"],
                x_end=t["xEnd"],
                params=config.params,
            ),
            params=config.params,
            verbose=results.verbose,
        )
        payload["endpointDiscrepancy"] = comparison
    results.add("swap", "ensemble", payload)
    if out_dir is not None:
        results.write_swap_csv(results.output_path(out_dir, "swap.csv"), ensemble)
        results.write_json(results.output_path(out_dir, "swap.json"), "swap")
    return EXIT_OK


def _duality(config, results, out_dir):
    records = duality_sweep(
        config.physics,
        config.weight_pairs,
        config["L"],
        config.y_grid,
        params=config.params,
        verbose=results.verbose,
    )
    results.add(
        "duality",
        "sweep",
        [
            {
                "c1": record.c1,
                "c2": record.c2,
                "V": record.V,
                "P": record.P,
                "dualitySum": record.duality_sum,
                "deficitIntegral": record.deficit_integral,
            }
            for record in records
        ],
    )
    if out_dir is not None:
        results.write_json(results.output_path(out_dir, "duality.json"), "duality")
    return EXIT_OK


def _verify(config, results, out_dir):
    report = run_verification(config=config, verbose=results.verbose)
    results.add("verify", "report", report)
    if out_dir is not None:
        results.write_json(results.output_path(out_dir, "verify.json"), "verify")
    return EXIT_OK if report["passed"] else EXIT_VERIFY_FAILED


RUNNERS = {
    "pattern": _pattern,
    "trajectories": _trajectories,
    "decompose": _decompose,
    "mirror": _mirror,
    "swap": _swap,
    "duality": _duality,
    "verify": _verify,
}


def run_command(command, config, out_dir=None, write=True, verbose=False):
    """
    Runs a subcommand.

    Args:
        command (str): one of `COMMANDS`
        config (Config): validated run configuration
        out_dir (str): output directory, defaults to config["outputDir"]
        write (bool): write files, otherwise only fill the Results

    Returns:
        tuple: (exit status, Results)
    """
    assert command in COMMANDS, "unknown command {0}".format(command)
    results = Results(config=config, verbose=verbose)
    if write:
        if out_dir is None:
            out_dir = config["outputDir"]
    else:
        out_dir = None
    if verbose:
        print("> Running {0} (config {1})".format(command, config.config_hash[:12]))
    status = RUNNERS[command](config, results, out_dir)
    return status, results
