from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from pyscl.constants import MAX_KOU_BOUND
from pyscl.witnesses.SymbolicDcpo import SymbolicDcpo


@dataclass(frozen=True)
class Point:
    """
    A point :math:`x` of :math:`X = (0, 1]`, as an exact rational.

    Raises
    ------
    ValueError
        When ``x`` is not a rational in :math:`(0, 1]`.
    """

    x: Fraction

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            raise ValueError(f"x = {self.x!r} is not a Fraction.")

        if not 0 < self.x <= 1:
            raise ValueError(f"x = {self.x} not in (0, 1].")

    def __repr__(self) -> str:
        return str(self.x)


@dataclass(frozen=True)
class Triple:
    """
    A triple :math:`(k, a, b)` of exact rationals with :math:`0 < k < 1` and
    :math:`0 < b \\le a \\le 1`.

    Raises
    ------
    ValueError
        When a coordinate is not a Fraction, or the range constraints fail.
    """

    k: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if not all(isinstance(v, Fraction) for v in (self.k, self.a, self.b)):
            raise ValueError("Triple coordinates must be Fractions.")

        if not 0 < self.k < 1:
            raise ValueError(f"k = {self.k} not in (0, 1).")

        if not 0 < self.b <= self.a <= 1:
            msg = f"Expected 0 < b <= a <= 1; got b = {self.b}, a = {self.a}."
            raise ValueError(msg)

    def __repr__(self) -> str:
        return f"({self.k}, {self.a}, {self.b})"


KouElement = Union[Point, Triple]


def kou_leq(first: KouElement, second: KouElement) -> bool:
    """
    Kou's order :math:`\\sqsubseteq`:

    * distinct points are incomparable;
    * :math:`(k_1, a_1, b_1) \\sqsubseteq (k_2, a_2, b_2)` iff
      :math:`k_1 \\le k_2`, :math:`a_1 = a_2` and :math:`b_1 = b_2`;
    * :math:`(k, a, b) \\sqsubseteq x` iff :math:`a = x` or
      :math:`kb \\le x < b`.

    Points are never below triples. All comparisons are exact.
    """
    if isinstance(first, Point):
        return isinstance(second, Point) and first.x == second.x

    if isinstance(second, Triple):
        return (
            first.k <= second.k
            and first.a == second.a
            and first.b == second.b
        )

    x = second.x
    return first.a == x or first.k * first.b <= x < first.b


def rationals(bound: int) -> list[Fraction]:
    """
    The rationals :math:`p / q` in :math:`(0, 1]` with :math:`q \\le B`, in
    increasing order.
    """
    values = {
        Fraction(num, den)
        for den in range(1, bound + 1)
        for num in range(1, den + 1)
    }
    return sorted(values)


def kou_window(bound: int) -> list[KouElement]:
    """
    All points :math:`p / q` and all triples whose coordinates are such
    rationals, with numerators and denominators at most :math:`B`. Points
    come first, in increasing order; triples are ordered by
    :math:`(a, b, k)`.
    """
    values = rationals(bound)
    ks = [value for value in values if value < 1]

    points: list[KouElement] = [Point(x) for x in values]
    triples: list[KouElement] = [
        Triple(k, a, b)
        for a in values
        for b in values
        if b <= a
        for k in ks
    ]
    return points + triples


KOU = SymbolicDcpo(
    name="kou",
    family="kou",
    leq=kou_leq,
    sampler=kou_window,
    max_bound=MAX_KOU_BOUND,
)
