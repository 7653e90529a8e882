from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.order.lower_sets import lower_set_masks


@dataclass(frozen=True)
class ClosedFamily:
    """
    The closed sets of a finite space whose points are the elements of
    ``base``. For :func:`scott_closed_family` these are all Scott closed sets
    :math:`C_\\sigma(P)`, but the hull-kernel closed sets of a sobrification
    are represented in the same way.

    Parameters
    ----------
    base
        The underlying poset; its elements are the points of the space.
    members
        The closed sets, sorted by cardinality and then bit-vector value.
    """

    base: FinitePoset
    members: tuple[ElementSet, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[ElementSet]:
        return iter(self.members)

    def __contains__(self, elems: object) -> bool:
        return elems in self.members

    def index(self, elems: ElementSet) -> int:
        """
        Returns the position of the given closed set in ``members``.

        Raises
        ------
        ValueError
            When the set is not closed.
        """
        try:
            return self.members.index(elems)
        except ValueError:
            raise ValueError(f"{elems} is not a closed set.") from None

    def opens(self) -> tuple[ElementSet, ...]:
        """
        The open sets, i.e., the complements of the closed sets.
        """
        return tuple(~member for member in self.members)

    def closure(self, elems: ElementSet) -> ElementSet:
        """
        Returns the smallest closed set containing ``elems``, computed as the
        intersection of all closed supersets.
        """
        result = ElementSet.full(self.base.size)
        for member in self.members:
            if elems.issubset(member):
                result = result & member

        return result


def scott_closed_family(
    poset: FinitePoset, max_members: int = MAX_FAMILY_SIZE
) -> ClosedFamily:
    """
    Computes :math:`C_\\sigma(P)`, the family of all Scott closed sets of a
    finite poset. Since every directed subset of a finite poset contains its
    supremum, the Scott closed sets are exactly the lower sets. There is one
    lower set per antichain (its set of maximal elements).

    Parameters
    ----------
    poset
        The poset :math:`P`.
    max_members
        Maximum family size. Default
        :data:`~pyscl.constants.MAX_FAMILY_SIZE`.

    Returns
    -------
    ClosedFamily
        All lower sets, from :math:`\\emptyset` to the full carrier.

    Raises
    ------
    BoundExceededError
        When there are more than ``max_members`` closed sets.
    """
    masks = lower_set_masks(poset, max_members)
    members = [ElementSet(poset.size, mask) for mask in masks]
    members.sort(key=ElementSet.sort_key)
    return ClosedFamily(poset, tuple(members))
