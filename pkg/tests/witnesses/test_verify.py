import numpy as np
import pytest
from numpy.testing import assert_, assert_equal, assert_raises

from pyscl.exceptions import BoundExceededError
from pyscl.witnesses import (
    JOHNSTONE,
    KOU,
    WITNESSES,
    Window,
    check_order_axioms,
    property_m_evidence,
    verify_witness_claims,
)


@pytest.mark.parametrize("bound", [2, 8, 12])
def test_johnstone_claims(bound: int):
    """
    Tests that the structural claims about Johnstone's dcpo hold on its
    windows, with bounded evidence for the statement about point closures.
    """
    reports = verify_witness_claims(JOHNSTONE, bound)
    claims = {report.claim_id: report.status for report in reports}

    assert_equal(
        claims,
        {
            "J1": "pass",
            "J2": "pass",
            "J3": "pass",
            "J4": "evidence",
            "J5": "pass",
        },
    )

    for report in reports:
        assert_equal(report.bound, bound)


def test_johnstone_case_counts():
    """
    Tests the number of cases of the Johnstone claims on the window of
    bound three, with twelve elements of which nine are finite.
    """
    reports = verify_witness_claims(JOHNSTONE, 3)
    cases = [report.cases for report in reports]
    assert_equal(cases, [12**3, 9, 3, 12, 1])


@pytest.mark.parametrize("bound", [2, 4, 6])
def test_kou_claims(bound: int):
    """
    Tests that the structural claims about Kou's dcpo hold on its windows.
    """
    reports = verify_witness_claims(KOU, bound)
    claims = {report.claim_id: report.status for report in reports}
    assert_equal(claims, {"K1": "pass", "K2": "pass", "K3": "evidence"})


def test_kou_claims_do_not_depend_on_seed():
    """
    Tests that the outcome of the Kou claims does not depend on the seed of
    the random samples beyond the window.
    """
    for seed in (1, 2, 3):
        reports = verify_witness_claims(KOU, 3, seed=seed)
        assert_(all(report.passed() for report in reports))


@pytest.mark.parametrize("name", ["johnstone-star", "kou-star"])
def test_star_claims(name: str):
    """
    Tests that the star variants get the claims of their base, and the
    claim that the base is an irreducible closed set without a generic
    point.
    """
    reports = verify_witness_claims(WITNESSES[name], 2)

    assert_equal(reports[-1].claim_id, "S1")
    assert_equal(reports[-1].status, "evidence")
    assert_(all(report.passed() for report in reports))

    base = verify_witness_claims(WITNESSES[name].base, 2)
    ids = [report.claim_id for report in reports[:-1]]
    assert_equal(ids, [report.claim_id for report in base])


def test_verify_raises_over_cap():
    """
    Tests that window bounds over the cap are refused.
    """
    with assert_raises(BoundExceededError):
        verify_witness_claims(KOU, 3, max_bound=2)

    with assert_raises(BoundExceededError):
        verify_witness_claims(WITNESSES["johnstone-star"], 3, max_bound=2)


def test_check_order_axioms_finds_violations():
    """
    Tests that a relation that is not an order is reported: b is not
    reflexive, a and b are mutually below each other, and two composite
    pairs are missing.
    """
    relation = np.array(
        [
            [True, True, False],
            [True, False, True],
            [False, False, True],
        ]
    )
    win = Window(("a", "b", "c"), relation)
    report = check_order_axioms("T", "an order", win, 3)

    assert_equal(report.cases, 27)
    assert_equal(report.status, "fail")
    assert_equal(len(report.violations), 4)


def test_check_order_axioms_on_chain():
    """
    Tests that a chain passes the order axioms.
    """
    relation = np.triu(np.ones((3, 3), dtype=bool))
    win = Window(("a", "b", "c"), relation)
    report = check_order_axioms("T", "an order", win, 3)

    assert_equal(report.status, "pass")
    assert_equal(report.cases, 27)


@pytest.mark.parametrize("dcpo", [JOHNSTONE, KOU])
def test_property_m_evidence(dcpo):
    """
    Tests that the property M search always reports bounded evidence, with
    one case per pair of window elements.
    """
    report = property_m_evidence(dcpo, 2)
    size = len(dcpo.sampler(2))

    assert_equal(report.claim_id, "property-M")
    assert_equal(report.status, "evidence")
    assert_equal(report.cases, size * (size - 1) // 2)
    assert_("pairs" in report.notes)


def test_property_m_evidence_finds_growing_mub():
    """
    Tests that two incomparable finite Johnstone elements get more minimal
    upper bounds in a larger window.
    """
    report = property_m_evidence(JOHNSTONE, 3)
    assert_("Example" in report.notes)
