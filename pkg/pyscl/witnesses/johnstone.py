from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from pyscl.constants import MAX_JOHNSTONE_BOUND
from pyscl.witnesses.SymbolicDcpo import SymbolicDcpo

INFINITY = math.inf
"""
The distinguished second coordinate :math:`\\infty`.
"""


@dataclass(frozen=True)
class JohnstoneElement:
    """
    An element :math:`(m, n)` of :math:`\\mathbb{N} \\times (\\mathbb{N} \\cup
    \\{\\infty\\})`.

    Raises
    ------
    ValueError
        When ``m`` is not a positive integer, or ``n`` is neither a positive
        integer nor :data:`INFINITY`.
    """

    m: int
    n: Union[int, float]

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            raise ValueError(f"m = {self.m} not understood.")

        if self.m < 1:
            raise ValueError("m < 1 not understood.")

        if self.n != INFINITY:
            if isinstance(self.n, bool) or not isinstance(self.n, int):
                raise ValueError(f"n = {self.n} not understood.")

            if self.n < 1:
                raise ValueError("n < 1 not understood.")

    @property
    def is_finite(self) -> bool:
        """
        Whether the second coordinate is finite.
        """
        return self.n != INFINITY

    def __repr__(self) -> str:
        second = self.n if self.is_finite else "∞"
        return f"({self.m}, {second})"


def johnstone_leq(first: JohnstoneElement, second: JohnstoneElement) -> bool:
    """
    Johnstone's order: :math:`(m, n) \\le (m', n')` iff either :math:`m = m'`
    and :math:`n \\le n'`, or :math:`n' = \\infty` and :math:`n \\le m'`. Every
    finite :math:`n` is below :math:`\\infty`.
    """
    if first.m == second.m and first.n <= second.n:
        return True

    return second.n == INFINITY and first.n <= second.m


def johnstone_window(bound: int) -> list[JohnstoneElement]:
    """
    All :math:`(m, n)` with :math:`m \\le B`, and :math:`n \\le B` or
    :math:`n = \\infty`, ordered by :math:`m` and then :math:`n`.
    """
    seconds = [*range(1, bound + 1), INFINITY]
    return [
        JohnstoneElement(m, n) for m in range(1, bound + 1) for n in seconds
    ]


JOHNSTONE = SymbolicDcpo(
    name="johnstone",
    family="johnstone",
    leq=johnstone_leq,
    sampler=johnstone_window,
    max_bound=MAX_JOHNSTONE_BOUND,
)
