from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.topology.ClosedFamily import ClosedFamily, scott_closed_family


@dataclass(frozen=True)
class IrrPoset:
    """
    The dcpo :math:`\\mathrm{Irr}(X)` of nonempty irreducible closed sets of
    a space, ordered by inclusion.

    Parameters
    ----------
    base
        The poset whose Scott space :math:`X = \\Sigma P` is considered.
    elements
        The nonempty irreducible closed sets, in the order of the closed
        family they were taken from.
    order
        Inclusion order on ``elements``: element ``i`` of this poset is the
        closed set ``elements[i]``.
    """

    base: FinitePoset
    elements: tuple[ElementSet, ...]
    order: FinitePoset

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, elems: ElementSet) -> Optional[int]:
        """
        Returns the index of the given set in ``elements``, or ``None`` if
        the set is not a nonempty irreducible closed set.
        """
        try:
            return self.elements.index(elems)
        except ValueError:
            return None


def is_irreducible(family: ClosedFamily, elems: ElementSet) -> bool:
    """
    Returns whether ``elems`` is irreducible in the space with the given
    closed sets: whenever :math:`A \\subseteq F_1 \\cup F_2` for closed
    :math:`F_1, F_2`, then :math:`A \\subseteq F_1` or
    :math:`A \\subseteq F_2`.
    """
    for first in family:
        if elems.issubset(first):
            continue

        for second in family:
            if elems.issubset(second):
                continue

            if elems.issubset(first | second):
                return False

    return True


def irreducible_closed(
    poset: FinitePoset,
    family: Optional[ClosedFamily] = None,
    max_members: int = MAX_FAMILY_SIZE,
) -> IrrPoset:
    """
    Computes :math:`\\mathrm{Irr}_\\sigma(P)`, all nonempty irreducible Scott
    closed sets of the poset, by the two-cover definition of irreducibility.

    For a finite poset these are exactly the principal lower sets
    :math:`{\\downarrow} x`, so the result is isomorphic to :math:`P`. That
    is not used here: it is a property the tests verify.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    family
        Its Scott closed sets, if already computed.
    max_members
        Cap passed to :func:`scott_closed_family` when ``family`` is not
        given.

    Returns
    -------
    IrrPoset
        The irreducible closed sets, ordered by inclusion.
    """
    if family is None:
        family = scott_closed_family(poset, max_members)

    elements = tuple(
        member
        for member in family
        if not member.is_empty() and is_irreducible(family, member)
    )

    size = len(elements)
    leq = np.zeros((size, size), dtype=bool)
    for row, first in enumerate(elements):
        for col, second in enumerate(elements):
            leq[row, col] = first.issubset(second)

    return IrrPoset(poset, elements, FinitePoset(leq))
