from typing import Literal

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset

Direction = Literal["down", "up"]


def down_set(
    poset: FinitePoset, elems: ElementSet, direction: Direction = "down"
) -> ElementSet:
    """
    Returns the lower set :math:`{\\downarrow} A` or the upper set
    :math:`{\\uparrow} A` generated by the given elements. Both are closure
    operators: extensive, idempotent, and monotone in ``elems``.

    Parameters
    ----------
    poset
        The poset.
    elems
        Set :math:`A` of elements of the poset.
    direction
        Either ``'down'`` (default) or ``'up'``.

    Returns
    -------
    ElementSet
        The generated lower or upper set.

    Raises
    ------
    ValueError
        When ``direction`` is not understood, or ``elems`` does not live in
        the poset's carrier.
    """
    if direction == "down":
        masks = poset.down_masks
    elif direction == "up":
        masks = poset.up_masks
    else:
        raise ValueError(f"direction = {direction} not understood.")

    if elems.size != poset.size:
        raise ValueError("Element set does not match the poset's carrier.")

    bits = 0
    for x in elems:
        bits |= masks[x]

    return ElementSet(poset.size, bits)
