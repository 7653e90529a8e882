from typing import Optional

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset


def upper_bounds(poset: FinitePoset, elems: ElementSet) -> ElementSet:
    """
    Returns the set of upper bounds of ``elems``. The upper bounds of the
    empty set are all elements.
    """
    bits = (1 << poset.size) - 1
    for x in elems:
        bits &= poset.up_masks[x]

    return ElementSet(poset.size, bits)


def lower_bounds(poset: FinitePoset, elems: ElementSet) -> ElementSet:
    """
    Returns the set of lower bounds of ``elems``. The lower bounds of the
    empty set are all elements.
    """
    bits = (1 << poset.size) - 1
    for x in elems:
        bits &= poset.down_masks[x]

    return ElementSet(poset.size, bits)


def least_upper_bound(poset: FinitePoset, elems: ElementSet) -> Optional[int]:
    """
    Returns the least upper bound of ``elems``, or ``None`` when the upper
    bounds have no least element.
    """
    upper = upper_bounds(poset, elems)
    for x in upper:
        if upper.bits & ~poset.up_masks[x] == 0:
            return x

    return None


def greatest_lower_bound(
    poset: FinitePoset, elems: ElementSet
) -> Optional[int]:
    """
    Returns the greatest lower bound of ``elems``, or ``None`` when the lower
    bounds have no greatest element.
    """
    lower = lower_bounds(poset, elems)
    for x in lower:
        if lower.bits & ~poset.down_masks[x] == 0:
            return x

    return None
