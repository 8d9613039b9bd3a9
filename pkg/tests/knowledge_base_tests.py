#!/usr/bin/env python
# encoding: utf-8
"""

Testfunction to test the integrity of the knowledge_base.py

Checks that the desk configurations load and that the reference values are
consistent with each other

"""
import json
import slitlab
import slitlab.knowledge_base as kb
from slitlab.adaptors import load_config


def desk_configurations_load_test():
    for name, desk in kb.desk_configurations.items():
        config = load_config(json.dumps(desk))
        assert config["model"] == desk["model"], name


def desk_k1_backflow_test():
    # k sigma < 1 / sqrt(2) for the field level desk only
    for name, desk in kb.desk_configurations.items():
        k = (2.0 * desk["E"]) ** 0.5
        backflow = k * desk["sigma"] < 0.5 ** 0.5
        assert backflow == (name == "gaussian_k1")


def duality_splits_test():
    for share, (P, V) in kb.duality_splits.items():
        assert 0 < share < 1
        assert abs(P - abs(2 * share - 1)) < 1e-12
        assert abs(V - 2 * (share * (1 - share)) ** 0.5) < 1e-12
        assert abs(P ** 2 + V ** 2 - 1) < 1e-12


def weight_sweep_test():
    assert len(kb.weight_sweep) == 9
    assert kb.weight_sweep[0] == 0.1
    assert kb.weight_sweep[-1] == 0.9
    assert sorted(kb.weight_sweep) == list(kb.weight_sweep)


def acceptance_tables_test():
    for name, tolerance in kb.acceptance_tolerances.items():
        assert 0 < tolerance < 1, name
    for name, size in kb.acceptance_sizes.items():
        assert isinstance(size, int) and size > 0, name
    assert kb.duality_far_field in kb.desk_distances
    assert set(kb.conservation_distances) & set(kb.desk_distances)
    assert slitlab.params["MIN_POINTS_PER_FRINGE"] * 4 < kb.acceptance_sizes[
        "duality_grid_points"
    ]
