#!/usr/bin/env python
# encoding: utf-8
"""
    slitlab
    -------

    Reference desk configurations and the acceptance thresholds checked by
    `slitlab verify`

    :license: MIT, see LICENSE.txt for more details

"""

# Desk configurations. Keys follow the JSON run configuration (see
# slitlab.adaptors). The k = 1 gaussian is only used for field level checks:
# with k * sigma < 1 / sqrt(2) its current runs backwards at the slit
# centers, so current lines are integrated on the k = 10 configurations.
desk_configurations = {
    "gaussian_k1": {"model": "gaussian", "E": 0.5, "a": 1.0, "sigma": 0.25, "L": 5.0},
    "gaussian": {"model": "gaussian", "E": 50.0, "a": 1.0, "sigma": 0.25, "L": 5.0},
    "point": {"model": "point", "E": 50.0, "a": 1.0, "sigma": 0.25, "L": 100.0},
}

desk_distances = (5.0, 50.0, 100.0)

conservation_distances = (5.0, 10.0, 50.0)

duality_splits = {
    # |c1| ** 2 : (P, V)
    0.5: (0.0, 1.0),
    0.9: (0.8, 0.6),
}

weight_sweep = tuple(round(0.1 * i, 1) for i in range(1, 10))

# Gaussian duality checks run in the far field, where both envelopes are
# nearly equal across the central fringes.
duality_far_field = 50.0

acceptance_tolerances = {
    "symmetry_current": 1e-13,
    "mirror_equivalence": 1e-14,
    "dirichlet_contrast": 1e-12,
    "additivity": 1e-10,
    "deficit_oracle": 1e-8,
    "integrator_accuracy": 1e-6,
    "gradient": 1e-6,
    "duality": 1e-6,
    "flux_conservation": 1e-6,
}

acceptance_sizes = {
    "symmetry_samples": 1000,
    "trajectories_per_half_plane": 64,
    "ordering_slices": 32,
    "accuracy_launches": 16,
    "gradient_points": 10000,
    "trapezoid_oracle_points": 1000001,
    "swap_pairs": 16,
    "swap_slices": 100,
    "duality_grid_points": 2001,
}
