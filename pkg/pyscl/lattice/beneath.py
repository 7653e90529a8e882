from functools import lru_cache, reduce

import numpy as np

from pyscl.ElementSet import ElementSet
from pyscl.FiniteLattice import FiniteLattice
from pyscl.constants import MAX_BENEATH_SIZE
from pyscl.exceptions import BoundExceededError
from pyscl.order.lower_sets import lower_set_masks


@lru_cache(maxsize=128)
def _beneath_table(lattice: FiniteLattice) -> np.ndarray:
    size = lattice.size
    join = lattice.join
    leq = lattice.order.leq
    table = np.ones((size, size), dtype=bool)

    for mask in lower_set_masks(lattice.order):
        if mask == 0:
            continue

        members = [x for x in lattice if mask >> x & 1]
        sup = reduce(lambda x, y: int(join[x, y]), members)

        # Every y <= sup S forces all x beneath y to lie in S.
        outside = np.array([not mask >> x & 1 for x in lattice])
        table[np.ix_(outside, leq[:, sup])] = False

    table.flags.writeable = False
    return table


def beneath_table(
    lattice: FiniteLattice, max_size: int = MAX_BENEATH_SIZE
) -> np.ndarray:
    """
    Decides the beneath relation :math:`x \\prec y` for all pairs: for every
    nonempty Scott closed :math:`S \\subseteq L`, :math:`y \\le \\bigvee S`
    implies :math:`x \\in S`. In a finite lattice every supremum exists and
    the Scott closed sets are the lower sets, so this enumerates all nonempty
    lower sets of the lattice. Results are memoised per lattice.

    Parameters
    ----------
    lattice
        The lattice :math:`L`.
    max_size
        Maximum lattice size. Default
        :data:`~pyscl.constants.MAX_BENEATH_SIZE`.

    Returns
    -------
    np.ndarray
        Read-only boolean matrix, ``True`` at ``[x, y]`` iff :math:`x \\prec
        y`.

    Raises
    ------
    BoundExceededError
        When the lattice has more than ``max_size`` elements.
    """
    if lattice.size > max_size:
        msg = f"Lattice of size {lattice.size} exceeds beneath cap {max_size}."
        raise BoundExceededError(msg)

    return _beneath_table(lattice)


def beneath(
    lattice: FiniteLattice,
    first: int,
    second: int,
    max_size: int = MAX_BENEATH_SIZE,
) -> bool:
    """
    Returns whether ``first`` is beneath ``second``. See
    :func:`beneath_table`.
    """
    return bool(beneath_table(lattice, max_size)[first, second])


def c_compact_elements(
    lattice: FiniteLattice,
    include_bottom: bool = True,
    max_size: int = MAX_BENEATH_SIZE,
) -> ElementSet:
    """
    Returns :math:`\\kappa(L)`, the set of C-compact elements :math:`x` with
    :math:`x \\prec x`.

    Parameters
    ----------
    lattice
        The lattice :math:`L`.
    include_bottom
        The bottom element is always C-compact, since every nonempty lower
        set contains it. When ``False``, it is left out of the result.
    max_size
        Maximum lattice size, as in :func:`beneath_table`.

    Returns
    -------
    ElementSet
        The C-compact elements.
    """
    table = beneath_table(lattice, max_size)
    idcs = [
        x
        for x in lattice
        if table[x, x] and (include_bottom or x != lattice.bottom)
    ]
    return ElementSet.from_indices(lattice.size, idcs)
