"""Self-check driver: suite registry, budgets, and result bookkeeping."""

from baxtertrees.errors import DomainError
from baxtertrees.verify import BUDGETS, DEFAULT_SEED, SUITES, run_suite, run_suites

import pytest


def test_registry_names():
    assert set(SUITES) == {
        "dimensions", "marginals", "transforms", "series", "identities",
        "examples", "bijections", "morphisms", "monomial", "dendriform",
    }
    assert BUDGETS == ("quick", "desk")


def test_unknown_suite_and_budget_rejected():
    with pytest.raises(DomainError):
        run_suite("spectral")
    with pytest.raises(DomainError):
        run_suite("examples", budget="overnight")


def test_quick_examples_suite_passes():
    r = run_suite("examples", budget="quick")
    assert r.ok and r.failed == 0 and r.passed > 0
    assert r.suite == "examples"
    assert all(c.ok for c in r.checks)


def test_run_suites_subset_order():
    results = run_suites(["marginals", "examples"], budget="quick")
    assert [r.suite for r in results] == ["marginals", "examples"]
    assert all(r.ok for r in results)


def test_seed_changes_only_spot_checks():
    a = run_suite("examples", budget="quick", seed=DEFAULT_SEED)
    b = run_suite("examples", budget="quick", seed=DEFAULT_SEED + 1)
    assert a.ok and b.ok
    assert [c.name for c in a.checks] == [c.name for c in b.checks]
