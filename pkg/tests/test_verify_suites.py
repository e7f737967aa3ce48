"""Verification suite plumbing: reports, determinism, range validation."""

import os
from unittest import mock

import pytest

from hypforms.verify import (
    DEFAULT_SEED,
    SUITE_NAMES,
    run_suite,
    suite_equivalence,
    suite_lemma1,
)


def test_every_suite_passes_at_reduced_ranges():
    overrides = {
        "table1": {"d_max": 8},
        "conjecture": {"d_max": 9},
        "lemmas": {"n_max": 12},
        "hessian_expansion": {"n_max": 4},
        "equivalence": {"d_max": 6},
        "winding": {"d_max": 8},
        "obs_arnold": {"d_max": 9},
        "poincare": {"d_max": 6},
        "isotopies": {},
    }
    assert set(overrides) == set(SUITE_NAMES)
    for name, kw in overrides.items():
        report = run_suite(name, **kw)[0]
        assert report.ok, report.summary_line()
        assert report.cases, "suite must run at least one case"
        assert report.suite == name


def test_reports_are_sorted_and_complete():
    report = run_suite("table1", d_max=6)[0]
    ids = [c["id"] for c in report.cases]
    assert ids == sorted(ids)
    for c in report.cases:
        assert set(c) >= {"id", "expected", "got", "pass", "comparison"}
    d = report.to_dict()
    assert d["passed"] + d["failed"] == len(report.cases)


def test_run_all_returns_every_suite():
    with mock.patch.dict(os.environ, {"HYPFORMS_THREADS": "4"}):
        reports = run_suite(
            "all", d_max=9, n_max=12
        )
    assert [r.suite for r in reports] == list(SUITE_NAMES)
    assert all(r.ok for r in reports)


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("no_such_suite")


def test_equivalence_deterministic_per_seed():
    r1 = suite_equivalence(d_max=3, seed=99)
    r2 = suite_equivalence(d_max=3, seed=99)
    strip = lambda r: [(c["id"], c["expected"], c["got"], c["pass"]) for c in r.cases]
    assert strip(r1) == strip(r2)
    r3 = suite_equivalence(d_max=3, seed=100)
    assert [c["id"] for c in r3.cases] != [c["id"] for c in r1.cases]
    assert r3.ok


def test_default_seed_is_stable_constant():
    # the published corpus is pinned to this seed; changing it silently
    # would invalidate recorded reports
    assert DEFAULT_SEED == 20260816


def test_lemma1_range_validation():
    with pytest.raises(ValueError):
        suite_lemma1(1)
