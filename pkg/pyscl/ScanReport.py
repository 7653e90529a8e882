from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union


@dataclass
class ScanReport:
    """
    Stores the outcome of a Scott closed set lattice faithfulness scan over
    all isomorphism classes of posets up to a given size.

    Parameters
    ----------
    bound
        Maximum poset size scanned.
    classes
        Number of isomorphism classes in the universe.
    pairs_checked
        Number of unordered pairs of classes examined, including pairs of a
        class with itself.
    iso_pairs
        Number of examined pairs whose Scott closed set lattices are
        isomorphic.
    violations
        Pairs of class indices with isomorphic lattices but non-isomorphic
        posets. Expected empty.
    birkhoff_failures
        Indices of classes whose lattice's join-irreducibles are not
        isomorphic to the class representative. Expected empty.
    elapsed_ms
        Wall-clock time of the scan, in milliseconds.

    Raises
    ------
    ValueError
        When a count is negative, or there are more isomorphic pairs than
        pairs checked.
    """

    bound: int
    classes: int
    pairs_checked: int
    iso_pairs: int
    violations: list[tuple[int, int]] = field(default_factory=list)
    birkhoff_failures: list[int] = field(default_factory=list)
    elapsed_ms: Optional[float] = None

    def __post_init__(self):
        if min(self.bound, self.classes, self.pairs_checked) < 0:
            raise ValueError("Negative count not understood.")

        if not 0 <= self.iso_pairs <= self.pairs_checked:
            raise ValueError("More isomorphic pairs than pairs checked.")

        if len(self.violations) > self.iso_pairs:
            raise ValueError("More violations than isomorphic pairs.")

    def passed(self) -> bool:
        """
        Returns whether the scan found no violations and no Birkhoff
        failures.
        """
        return not self.violations and not self.birkhoff_failures

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        """
        Returns the JSON-serialisable form of this report. The elapsed time
        is only included when ``timing`` is set; it is ``None`` otherwise, so
        that reports of identical scans are identical.
        """
        return {
            "bound": self.bound,
            "classes": self.classes,
            "pairs_checked": self.pairs_checked,
            "iso_pairs": self.iso_pairs,
            "violations": [list(pair) for pair in self.violations],
            "birkhoff_failures": list(self.birkhoff_failures),
            "elapsed_ms": self.elapsed_ms if timing else None,
        }

    def to_json(
        self, where: Optional[Union[Path, str]] = None, timing: bool = False
    ) -> str:
        """
        Serialises this report as JSON, and writes it to the given location
        if one is passed.

        Returns
        -------
        str
            The JSON document.
        """
        text = json.dumps(self.to_dict(timing), indent=2) + "\n"

        if where is not None:
            with open(where, "w") as fh:
                fh.write(text)

        return text

    @classmethod
    def from_json(cls, where: Union[Path, str]) -> ScanReport:
        """
        Reads a report written by :meth:`to_json`.
        """
        with open(where) as fh:
            data = json.load(fh)

        return cls(
            bound=data["bound"],
            classes=data["classes"],
            pairs_checked=data["pairs_checked"],
            iso_pairs=data["iso_pairs"],
            violations=[tuple(pair) for pair in data["violations"]],
            birkhoff_failures=data.get("birkhoff_failures", []),
            elapsed_ms=data["elapsed_ms"],
        )

    def __str__(self) -> str:
        summary = [
            "Faithfulness scan",
            "=================",
            f"        bound: {self.bound}",
            f"      classes: {self.classes}",
            f"pairs checked: {self.pairs_checked}",
            f"    iso pairs: {self.iso_pairs}",
            f"   violations: {len(self.violations)}",
            f"     birkhoff: {len(self.birkhoff_failures)} failures",
        ]

        if self.elapsed_ms is not None:
            summary.append(f"     run-time: {self.elapsed_ms / 1000:.2f}s")

        for first, second in self.violations:
            summary.append(f"    ! classes {first} and {second}")

        return "\n".join(summary)
