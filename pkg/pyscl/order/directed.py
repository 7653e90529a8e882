from typing import Iterator

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import EmptySetError, NotDirectedError


def is_directed(poset: FinitePoset, elems: ElementSet) -> bool:
    """
    Returns whether the given set is directed: nonempty, and every pair of
    members has an upper bound inside the set.
    """
    if elems.is_empty():
        return False

    members = list(elems)
    for idx, x in enumerate(members):
        for y in members[idx + 1 :]:
            bounds = poset.up_masks[x] & poset.up_masks[y] & elems.bits
            if not bounds:
                return False

    return True


def directed_subsets(poset: FinitePoset) -> Iterator[ElementSet]:
    """
    Yields all nonempty directed subsets of the poset, in increasing order
    of their bit-vectors.
    """
    for bits in range(1, 1 << poset.size):
        elems = ElementSet(poset.size, bits)
        if is_directed(poset, elems):
            yield elems


def directed_sup(poset: FinitePoset, elems: ElementSet) -> int:
    """
    Returns the supremum of a nonempty directed set. In a finite poset this
    is the greatest element of the set.

    Parameters
    ----------
    poset
        The poset.
    elems
        A nonempty directed set :math:`D`.

    Returns
    -------
    int
        The element :math:`\\bigvee D`, which is a member of :math:`D`.

    Raises
    ------
    EmptySetError
        When ``elems`` is empty.
    NotDirectedError
        When ``elems`` is not directed.
    """
    if elems.is_empty():
        raise EmptySetError("The empty set has no directed supremum.")

    for x in elems:
        if elems.bits & ~poset.down_masks[x] == 0:  # x is above all of D
            return x

    raise NotDirectedError(f"{elems} has no greatest element.")
