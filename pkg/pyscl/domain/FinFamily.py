from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.domain.way_below import way_below
from pyscl.order.down_set import down_set


@dataclass(frozen=True)
class FinFamily:
    """
    The family :math:`\\mathrm{fin}(x)` of finite sets way below an element.

    Parameters
    ----------
    owner
        The element :math:`x`.
    members
        Finite sets :math:`F` with :math:`F \\ll x`, ordered by cardinality
        and then bit-vector value.
    """

    owner: int
    members: tuple[ElementSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __contains__(self, elems: object) -> bool:
        return elems in self.members


def _is_antichain(poset: FinitePoset, elems: ElementSet) -> bool:
    return all(elems.bits & poset.up_masks[x] == 1 << x for x in elems)


def fin_sets(
    poset: FinitePoset, x: int, antichains_only: bool = False
) -> FinFamily:
    """
    Computes :math:`\\mathrm{fin}(x) = \\{F: F \\text{ finite}, F \\ll x\\}`,
    deciding way-below by its definition.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    x
        The element :math:`x`.
    antichains_only
        When ``True``, only antichains are returned. Every upper set
        :math:`{\\uparrow} F` has a unique antichain generator
        :math:`\\min({\\uparrow} F)`, so these represent the family up to
        equal upper sets.

    Returns
    -------
    FinFamily
        The finite sets way below :math:`x`.
    """
    members = []
    for bits in range(1, 1 << poset.size):
        elems = ElementSet(poset.size, bits)

        if antichains_only and not _is_antichain(poset, elems):
            continue

        if way_below(poset, elems, x):
            members.append(elems)

    members.sort(key=ElementSet.sort_key)
    return FinFamily(x, tuple(members))


def upper_sets(poset: FinitePoset, family: FinFamily) -> set[int]:
    """
    Bit-vectors of the distinct upper sets :math:`{\\uparrow} F` of the
    family's members.
    """
    return {down_set(poset, elems, "up").bits for elems in family}
