#!/usr/bin/env python
# encoding: utf-8
"""

Tests for slitlab.verification: individual acceptance checks on reduced
sample sizes

"""
import copy
import slitlab
import slitlab.knowledge_base as kb
from slitlab import verification
from slitlab.errors import NodeError

SMALL_SIZES = dict(
    kb.acceptance_sizes,
    symmetry_samples=200,
    trajectories_per_half_plane=6,
    ordering_slices=8,
    accuracy_launches=3,
    gradient_points=500,
    trapezoid_oracle_points=200001,
    swap_pairs=4,
    swap_slices=12,
)

RECORD_KEYS = {"name", "case", "passed", "value", "tolerance", "details"}


def run_check(check, **kwargs):
    p = copy.deepcopy(slitlab.params)
    records = check(p, kb.acceptance_tolerances, SMALL_SIZES, **kwargs)
    assert len(records) > 0
    for record in records:
        assert set(record.keys()) == RECORD_KEYS
        assert record["passed"], record
    return records


def symmetry_current_check_test():
    records = run_check(verification.check_symmetry_current)
    assert [r["case"] for r in records] == ["gaussian_k1", "gaussian", "point"]
    assert all(r["value"] == 0.0 for r in records)


def mirror_equivalence_check_test():
    records = run_check(verification.check_mirror_equivalence)
    names = {r["name"] for r in records}
    assert names == {"mirror_equivalence", "dirichlet_contrast"}
    assert len(records) == 2 * 2 * len(kb.desk_distances)


def additivity_check_test():
    run_check(verification.check_additivity)


def non_additivity_check_test():
    records = run_check(verification.check_non_additivity)
    for record in records:
        assert record["details"]["deficitIntegral"] > 0


def confinement_and_ordering_check_test():
    records = run_check(verification.check_confinement_and_ordering)
    assert [r["name"] for r in records] == ["confinement", "axis_line", "ordering"]
    assert records[0]["details"]["trajectories"] == 13


def integrator_accuracy_check_test():
    records = run_check(verification.check_integrator_accuracy)
    assert [r["case"] for r in records] == ["gaussian", "point"]


def gradient_check_test():
    records = run_check(verification.check_gradients)
    assert len(records) == 6


def tangent_swap_check_test():
    records = run_check(verification.check_tangent_swap)
    assert [r["name"] for r in records] == [
        "swap_multiset",
        "swap_confinement",
        "swap_occupancy",
    ]
    assert records[0]["details"]["pairs"] == 4


def duality_check_test():
    records = run_check(verification.check_duality)
    assert [r["name"] for r in records].count("duality_split") == len(kb.duality_splits)
    assert [r["case"] for r in records if r["name"] == "duality_bound"] == [
        "point L=100",
        "gaussian L=50",
    ]


def flux_conservation_check_test():
    records = run_check(verification.check_flux_conservation)
    assert records[0]["details"]["distances"] == list(kb.conservation_distances)


def failing_check_is_recorded_test(monkeypatch):
    def on_node(p, tolerances, sizes):
        raise NodeError("launch point sits on a node")

    monkeypatch.setattr(verification, "CHECKS", (("on_node", on_node, False),))
    records = verification._run_checks(slitlab.params, kb.acceptance_tolerances, SMALL_SIZES)
    assert len(records) == 1
    assert records[0]["passed"] is False
    assert records[0]["details"]["error"] == "NodeError"


def verification_report_test(monkeypatch):
    monkeypatch.setattr(
        verification,
        "CHECKS",
        (("symmetry_current", verification.check_symmetry_current, False),),
    )
    report = slitlab.run_verification()
    assert report["passed"] is True
    assert report["checks"][-1]["name"] == "determinism"
    assert len(report["checks"]) == 4
