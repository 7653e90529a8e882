from typing import Iterable

import numpy as np

from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import CycleError


def build_poset(size: int, covers: Iterable[tuple[int, int]]) -> FinitePoset:
    """
    Builds the poset whose order is the reflexive-transitive closure of the
    given cover pairs.

    Parameters
    ----------
    size
        Number of elements. The elements are ``0, ..., size - 1``.
    covers
        Pairs :math:`(x, y)` with :math:`x < y`. The pairs need not be actual
        covers: any generating set of the strict order works.

    Returns
    -------
    FinitePoset
        The generated poset.

    Raises
    ------
    ValueError
        When ``size`` is negative.
    IndexError
        When a pair references an element outside ``0, ..., size - 1``.
    CycleError
        When the closure is not antisymmetric.
    """
    if size < 0:
        raise ValueError("Negative poset size not understood.")

    leq = np.eye(size, dtype=bool)
    for x, y in covers:
        if not (0 <= x < size and 0 <= y < size):
            raise IndexError(f"Pair ({x}, {y}) outside of {size} elements.")

        leq[x, y] = True

    # Warshall's algorithm, one row-broadcast per intermediate element.
    for mid in range(size):
        leq |= leq[:, mid, None] & leq[None, mid, :]

    if np.any(leq & leq.T & ~np.eye(size, dtype=bool)):
        raise CycleError("The given pairs contain a cycle.")

    return FinitePoset(leq)
