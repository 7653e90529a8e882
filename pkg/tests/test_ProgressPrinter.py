from numpy.testing import assert_, assert_equal

from pyscl import CheckReport, ScanReport
from pyscl.ProgressPrinter import ProgressPrinter


def test_start(capsys):
    """
    Tests that the progress printer outputs the command and bound when
    calling start.
    """
    printer = ProgressPrinter(should_print=True)
    printer.start("scan", 4)

    out = capsys.readouterr().out
    assert_("pyscl v" in out)
    assert_("'scan'" in out)
    assert_("bound 4" in out)


def test_size_prints_header_once(capsys):
    """
    Tests that the per-size lines share a single table header.
    """
    printer = ProgressPrinter(should_print=True)
    printer.size(1, 1, 0.0)
    printer.size(2, 2, 0.1)

    out = capsys.readouterr().out
    assert_equal(out.count("Classes"), 1)
    assert_equal(len(out.strip().splitlines()), 3)


def test_end_scan(capsys):
    """
    Tests that the scan summary mentions the counts of the report.
    """
    printer = ProgressPrinter(should_print=True)
    printer.end_scan(ScanReport(4, 24, 300, 24))

    out = capsys.readouterr().out
    assert_("24 classes" in out)
    assert_("300 pairs" in out)
    assert_("0 violations" in out)


def test_end_checks(capsys):
    """
    Tests that the checks summary counts passed and failed claims.
    """
    reports = [
        CheckReport("a", "x", 1, cases=1),
        CheckReport("b", "y", 1, cases=1, violations=["bad"]),
    ]

    printer = ProgressPrinter(should_print=True)
    printer.end_checks(reports)

    out = capsys.readouterr().out
    assert_("2 claims checked: 1 passed, 1 failed" in out)


def test_should_print_false_no_output(capsys):
    """
    Tests that nothing is printed when ``should_print`` is ``False``.
    """
    printer = ProgressPrinter(should_print=False)
    printer.start("scan", 4)
    printer.size(1, 1, 0.0)
    printer.end_scan(ScanReport(4, 24, 300, 24))
    printer.end_checks([])

    out = capsys.readouterr().out
    assert_equal(out, "")
