"""Acceptance battery: one test per criterion, each printing its verdict line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines; the same battery backs the ``paper-suite`` CLI subcommand and HTTP
endpoint.
"""

from __future__ import annotations

import json

from quadric_stability.acceptance import (
    CriterionResult,
    criterion_chow_example,
    criterion_golden_monomial_lists,
    criterion_lct_bounds,
    criterion_lemma_verification,
    criterion_minimal_orbits,
    criterion_multiplicities,
    criterion_property_suites,
)
from quadric_stability.cli import main


def report(result: CriterionResult) -> None:
    print(f"[{'PASS' if result.passed else 'FAIL'}] {result.criterion}")
    for line in result.details:
        print(f"    {line}")
    assert result.passed, f"{result.criterion}: {result.details}"


def test_criterion_1_lemma_verification():
    report(criterion_lemma_verification())


def test_criterion_2_golden_monomial_lists():
    report(criterion_golden_monomial_lists())


def test_criterion_3_multiplicity_claims():
    report(criterion_multiplicities())


def test_criterion_4_lct_bounds():
    report(criterion_lct_bounds())


def test_criterion_5_chow_example():
    report(criterion_chow_example())


def test_criterion_6_minimal_orbits():
    report(criterion_minimal_orbits())


def test_criterion_7_property_suites():
    report(criterion_property_suites())


def test_paper_suite_cli_passes(capsys):
    code = main(["paper-suite", "--json", "--fail-on", "fail"])
    out = capsys.readouterr().out
    payload = json.loads(out)["payload"]
    assert code == 0
    assert payload["passed"] is True
    assert [c["criterion"] for c in payload["criteria"]] == [
        "lemma-verification",
        "golden-monomial-lists",
        "multiplicity-claims",
        "lct-bounds",
        "chow-example",
        "minimal-orbits",
        "property-suites",
    ]
