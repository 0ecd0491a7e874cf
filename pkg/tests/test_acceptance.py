"""Acceptance gate: the seven headline criteria, one pass/fail line each.

Exact combinatorial statements, zero tolerance everywhere.  Run with
`pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""

import pytest

from neuralideals.betti import invariants
from neuralideals.structure import (
    family_prop32,
    family_prop33,
    family_prop34_pd,
    family_prop34_reg,
    family_thm36,
)
from neuralideals.verify import run_verification


@pytest.fixture(scope="module")
def reports():
    """One shared verification pass: exhaustive n = 2, 3 plus 500 sampled n = 4."""
    return {
        2: run_verification(2, "exhaustive", seed=0),
        3: run_verification(3, "exhaustive", seed=0),
        4: run_verification(4, "sample", seed=1, count=500),
    }


def announce(criterion: str, failures: list[str]) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"\nACCEPTANCE {criterion}: {status}")
    assert not failures, "\n".join(failures)


def suite_failures(reports, suite: str) -> list[str]:
    out = []
    for n, report in reports.items():
        checked = report.suite_checked.get(suite, 0)
        passed = report.suite_passes.get(suite, 0)
        if checked != passed:
            bad = [c for c in report.counterexamples if c.suite == suite]
            out.append(f"n={n}: {checked - passed}/{checked} failures in {suite}: "
                       + "; ".join(f"{c.subject}: {c.detail}" for c in bad[:5]))
    return out


def test_criterion_1_family_values():
    failures = []
    for n in range(1, 6):
        for k in range(1, n + 1):
            pd = invariants(family_prop32(n, k).inner)[0]
            if pd != k - 1:
                failures.append(f"prop32({n},{k}): pd {pd} != {k - 1}")
    for n in range(1, 5):
        for k in range(1, n + 1):
            reg = invariants(family_prop33(n, k).inner)[1]
            if reg != n + k - 1:
                failures.append(f"prop33({n},{k}): reg {reg} != {n + k - 1}")
    for n in range(1, 5):
        for i in range(0, 2 * n):
            pd = invariants(family_prop34_pd(n, i).inner)[0]
            if pd != i:
                failures.append(f"prop34-pd({n},{i}): pd {pd} != {i}")
        for j in range(1, 2 * n):
            reg = invariants(family_prop34_reg(n, j).inner)[1]
            if reg != j:
                failures.append(f"prop34-reg({n},{j}): reg {reg} != {j}")
    for k in range(1, 5):
        for n in (k, 5):
            pd, reg = invariants(family_thm36(n, k).inner)
            if (pd, reg) != (k, k):
                failures.append(f"thm36({n},{k}): (pd, reg) = ({pd}, {reg}) != ({k}, {k})")
    announce("1 (family values, exact)", failures)


def test_criterion_2_bound_theorems(reports):
    announce("2 (pd/reg bounds, exhaustive n<=3 + 500 sampled n=4)",
             suite_failures(reports, "bounds"))


def test_criterion_3_three_way_agreement(reports):
    failures = suite_failures(reports, "agreement")
    for n in (2, 3):
        expected = {2: 15, 3: 255}[n]
        if reports[n].suite_checked.get("agreement", 0) != expected:
            failures.append(f"n={n}: expected {expected} ideals, "
                            f"saw {reports[n].suite_checked.get('agreement', 0)}")
    announce("3 (recursive check = oracle LR = linear quotients)", failures)


def test_criterion_4_betti_splitting_identity(reports):
    announce("4 (termwise splitting identity + max formulas)",
             suite_failures(reports, "splitting"))


def test_criterion_5_oracle_soundness(reports):
    failures = suite_failures(reports, "oracle")
    failures += suite_failures(reports, "restriction")
    failures += suite_failures(reports, "scaling")
    for report in reports.values():
        if report.suite_checked.get("scaling", 0) < 100:
            failures.append("fewer than 100 scaling pairs exercised")
    announce("5 (Euler identity, beta_0, reg bounds, restriction, scaling)", failures)


def test_criterion_6_dominant_formulas(reports):
    failures = suite_failures(reports, "dominant")
    if reports[4].suite_checked.get("dominant", 0) < 200:
        failures.append("fewer than 200 dominant sets exercised at n <= 4")
    announce("6 (dominant closed forms vs oracle, 200 random sets)", failures)


def test_criterion_7_code_pipeline(reports):
    failures = suite_failures(reports, "code-pipeline")
    if reports[4].suite_checked.get("code-pipeline", 0) < 100:
        failures.append("fewer than 100 random codes exercised at n <= 4")
    announce("7 (code pipeline soundness, 100 random codes)", failures)
