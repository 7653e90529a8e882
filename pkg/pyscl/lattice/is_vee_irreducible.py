import numpy as np

from pyscl.FiniteLattice import FiniteLattice


def is_vee_irreducible(lattice: FiniteLattice, elem: int) -> bool:
    """
    Returns whether :math:`a \\le x \\vee y` implies :math:`a \\le x` or
    :math:`a \\le y`, for all :math:`x, y`. Note that the bottom element
    satisfies this trivially.

    Raises
    ------
    IndexError
        When ``elem`` is not an element of the lattice.
    """
    if not 0 <= elem < lattice.size:
        raise IndexError(f"Element {elem} not in lattice of {lattice.size}.")

    below = lattice.order.leq[elem]
    below_join = below[lattice.join]
    below_either = below[:, None] | below[None, :]
    return not np.any(below_join & ~below_either)
