from typing import Optional

from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import BoundExceededError


def lower_set_masks(
    poset: FinitePoset, max_count: Optional[int] = None
) -> list[int]:
    """
    Returns the bit-vectors of all lower sets of the poset, in generation
    order. Elements are added in a linear extension, so an element may join
    a lower set once all its strict predecessors are in.

    Raises
    ------
    BoundExceededError
        When ``max_count`` is given and there are more lower sets.
    """
    order = sorted(poset, key=lambda x: poset.heights[x])
    masks = [0]

    for x in order:
        below = poset.down_masks[x] & ~(1 << x)
        masks += [mask | 1 << x for mask in masks if mask & below == below]

        if max_count is not None and len(masks) > max_count:
            msg = f"More than {max_count} lower sets."
            raise BoundExceededError(msg)

    return masks
