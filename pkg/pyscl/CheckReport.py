from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal, Optional

Status = Literal["pass", "fail", "evidence"]


@dataclass
class CheckReport:
    """
    Stores the outcome of verifying a single claim on a bounded universe or
    window.

    Parameters
    ----------
    claim_id
        Short identifier of the claim, e.g. ``'J2'`` or ``'kappa-principal'``.
    anchor
        Quote of the statement the claim verifies, so failures are traceable
        to the statement they contradict.
    bound
        Size or window bound the claim was checked on.
    cases
        Number of cases checked.
    violations
        Descriptions of the cases that violate the claim. Expected empty.
    evidence
        Whether the check only provides bounded evidence for a statement
        about an infinite object. Passing evidence is reported with status
        ``'evidence'`` rather than ``'pass'``.
    notes
        Interpretation notes, e.g. on how a statement was read.

    Raises
    ------
    ValueError
        When ``cases`` is negative, or there are more violations than cases.
    """

    claim_id: str
    anchor: str
    bound: int
    cases: int = 0
    violations: list[str] = field(default_factory=list)
    evidence: bool = False
    notes: Optional[str] = None

    def __post_init__(self):
        if self.cases < 0:
            raise ValueError("Negative number of cases not understood.")

        if len(self.violations) > self.cases:
            raise ValueError("More violations than cases checked.")

    @property
    def status(self) -> Status:
        """
        ``'fail'`` when there are violations, else ``'evidence'`` or
        ``'pass'`` depending on the kind of check.
        """
        if self.violations:
            return "fail"

        return "evidence" if self.evidence else "pass"

    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        """
        Returns the JSON-serialisable form of this report.
        """
        data: dict[str, Any] = {
            "claim_id": self.claim_id,
            "paper_anchor": self.anchor,
            "bound": self.bound,
            "cases": self.cases,
            "violations": list(self.violations),
            "status": self.status,
        }

        if self.notes is not None:
            data["notes"] = self.notes

        return data

    def __str__(self) -> str:
        summary = (
            f"[{self.status:>8}] {self.claim_id}: {self.cases} cases, "
            f"{len(self.violations)} violations (bound {self.bound})"
        )
        lines = [summary, f"           {self.anchor}"]

        if self.notes:
            lines.append(f"           note: {self.notes}")

        lines.extend(f"           ! {msg}" for msg in self.violations)
        return "\n".join(lines)
