from __future__ import annotations

from pathlib import Path

import pytest

from cluster_forge import suites
from cluster_forge.suites import Check, SUITES, anchors, run_check, run_suite

README = Path(__file__).resolve().parents[1] / "README.md"

EXPECTED = ["magnification", "product-extension", "tau-properties", "rho-properties", "towers", "mingen",
            "triplets", "impossibility-412", "families", "relative", "direct-power"]


def test_suite_names():
    assert list(SUITES) == EXPECTED


@pytest.mark.parametrize("name", EXPECTED)
def test_suite_passes(name):
    res = run_suite(name)
    failed = [c for c in res.checks if not c.passed]
    assert not failed, failed
    assert res.passed and res.as_dict()["passed"]


@pytest.mark.parametrize("name", ["magnification", "product-extension"])
def test_randomized_suites_pass_for_other_seeds(name):
    assert run_suite(name, seed=12345).passed


def test_claims_unique_and_anchored():
    claims = [c for _, c, _ in anchors()]
    assert len(claims) == len(set(claims))
    assert all(a.strip() for _, _, a in anchors())


def test_every_anchor_is_indexed_in_readme():
    text = README.read_text()
    missing = [(claim, anchor) for _, claim, anchor in anchors() if claim not in text or anchor not in text]
    assert not missing


def test_failing_and_crashing_checks_are_reported():
    res = run_check(Check("T-1", "odd numbers", lambda seed: iter([1, 2, 3]), lambda x: x % 2 == 1))
    assert not res.passed and res.details.startswith("1/3 cases failed")
    res = run_check(Check("T-2", "crash", lambda seed: iter([0]), lambda x: 1 // x))
    assert not res.passed and "ZeroDivisionError" in res.details
    res = run_check(Check("T-3", "empty", lambda seed: iter([]), lambda x: True))
    assert not res.passed


def test_suite_fails_when_any_check_fails(monkeypatch):
    good = Check("G-1", "fine", lambda seed: iter([1]), lambda x: True)
    bad = Check("B-1", "broken", lambda seed: iter([1]), lambda x: (False, "note"))
    monkeypatch.setitem(SUITES, "mixed", [good, bad])
    res = run_suite("mixed")
    assert not res.passed
    assert [c.passed for c in res.checks] == [True, False]
    assert "note" in res.checks[1].details
    with pytest.raises(KeyError):
        run_suite("absent")


def test_coset_count_oracle_agrees():
    m = suites.model("sym:4,2")
    from cluster_forge.group_core import all_subgroups
    from cluster_forge.invariants import root_capacity
    for U in all_subgroups(m.table):
        assert suites.rho_by_cosets(m, U) == root_capacity(m, U)


def test_sdp_formula_helpers():
    assert suites.sdp_inverse_formula((1, 2, 3), 1, 3, 5) == ((2, 4, 3), 2)
    assert suites.sdp_conjugation_formula((1, 2), 1) == ((2, 0, 1), 0)
