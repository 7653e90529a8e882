import pytest
from numpy.testing import assert_, assert_equal, assert_raises

from pyscl import CheckReport


@pytest.mark.parametrize(
    ("violations", "evidence", "status"),
    [
        ([], False, "pass"),
        ([], True, "evidence"),
        (["bad"], False, "fail"),
        (["bad"], True, "fail"),
    ],
)
def test_status(violations: list[str], evidence: bool, status: str):
    """
    Tests that violations always fail a report, and that passing evidence
    is reported as such.
    """
    report = CheckReport("c", "anchor", 3, 5, violations, evidence)
    assert_equal(report.status, status)
    assert_equal(report.passed(), not violations)


def test_raises_invalid_counts():
    """
    Tests that negative case counts, and more violations than cases, are
    rejected.
    """
    with assert_raises(ValueError):
        CheckReport("c", "anchor", 3, cases=-1)

    with assert_raises(ValueError):
        CheckReport("c", "anchor", 3, cases=1, violations=["a", "b"])


def test_to_dict():
    """
    Tests the JSON-serialisable form of a report.
    """
    report = CheckReport("J2", "is a chain", 8, cases=12, notes="a note")

    assert_equal(
        report.to_dict(),
        {
            "claim_id": "J2",
            "paper_anchor": "is a chain",
            "bound": 8,
            "cases": 12,
            "violations": [],
            "status": "pass",
            "notes": "a note",
        },
    )

    report.notes = None
    assert_("notes" not in report.to_dict())


def test_str_lists_violations():
    """
    Tests that the text form mentions the claim, status and violations.
    """
    report = CheckReport("K1", "order", 2, cases=4, violations=["x"])
    text = str(report)

    assert_("K1" in text)
    assert_("fail" in text)
    assert_("! x" in text)
