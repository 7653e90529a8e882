from importlib.metadata import version

from pyscl.CheckReport import CheckReport
from pyscl.ScanReport import ScanReport

# Templates for various different outputs.
_START = """pyscl v{version}

Running '{command}' with bound {bound}.
"""

_SIZE_HEADER = "    Size   Classes   Elapsed"

_SIZE = "    {size:>4} {classes:>9} {elapsed:>8.2f}s"

_SCAN_END = """
Scan of {classes} classes finished: {pairs} pairs checked, {iso} isomorphic
lattice pairs, {violations} violations, {failures} Birkhoff failures.
"""

_CHECKS_END = """
{num_reports} claims checked: {passed} passed, {failed} failed.
"""


class ProgressPrinter:
    """
    A helper class that prints progress information to the console, if
    desired.

    Parameters
    ----------
    should_print
        Whether to print information to the console. When ``False``, nothing
        is printed.
    """

    def __init__(self, should_print: bool):
        self._print = should_print
        self._header = False

    def start(self, command: str, bound: int):
        """
        Outputs the program version and the command that is being run.
        """
        if self._print:
            msg = _START.format(
                version=version("pyscl"), command=command, bound=bound
            )
            print(msg)

    def size(self, size: int, classes: int, elapsed: float):
        """
        Outputs the number of isomorphism classes found for a poset size,
        and the time spent so far.
        """
        if self._print:
            if not self._header:
                print(_SIZE_HEADER)
                self._header = True

            print(_SIZE.format(size=size, classes=classes, elapsed=elapsed))

    def end_scan(self, report: ScanReport):
        """
        Outputs a summary of a faithfulness scan.
        """
        if self._print:
            msg = _SCAN_END.format(
                classes=report.classes,
                pairs=report.pairs_checked,
                iso=report.iso_pairs,
                violations=len(report.violations),
                failures=len(report.birkhoff_failures),
            )
            print(msg)

    def end_checks(self, reports: list[CheckReport]):
        """
        Outputs a summary of a list of claim checks.
        """
        if self._print:
            passed = sum(report.passed() for report in reports)
            msg = _CHECKS_END.format(
                num_reports=len(reports),
                passed=passed,
                failed=len(reports) - passed,
            )
            print(msg)
