import numpy as np

from pyscl.FiniteLattice import FiniteLattice


def is_distributive(lattice: FiniteLattice) -> bool:
    """
    Checks the finite distributive law
    :math:`x \\wedge (y \\vee z) = (x \\wedge y) \\vee (x \\wedge z)` on all
    triples. For finite lattices, distributivity and complete distributivity
    coincide.
    """
    meet, join = lattice.meet, lattice.join
    lhs = meet[:, join]  # [x, y, z] = x meet (y join z)
    rhs = join[meet[:, :, None], meet[:, None, :]]
    return bool(np.array_equal(lhs, rhs))
