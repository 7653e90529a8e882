import numpy as np

from pyscl.FiniteLattice import FiniteLattice
from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import NotALatticeError
from pyscl.topology.ClosedFamily import ClosedFamily


def lattice_of(family: ClosedFamily) -> FiniteLattice:
    """
    Realises a family of closed sets as an abstract lattice, ordered by
    inclusion, with union as join and intersection as meet. Element ``i`` of
    the lattice is ``family.members[i]``, which is also its label.

    Parameters
    ----------
    family
        A nonempty family of sets that is closed under union and
        intersection, such as :math:`C_\\sigma(P)`.

    Returns
    -------
    FiniteLattice
        The lattice of the family.

    Raises
    ------
    NotALatticeError
        When the family is empty, or not closed under union or intersection.
    """
    members = family.members
    size = len(members)

    if size == 0:
        raise NotALatticeError("An empty family is not a lattice.")

    index = {member: idx for idx, member in enumerate(members)}
    leq = np.zeros((size, size), dtype=bool)
    meet = np.zeros((size, size), dtype=int)
    join = np.zeros((size, size), dtype=int)

    for row, first in enumerate(members):
        for col, second in enumerate(members):
            union = first | second
            intersection = first & second

            if union not in index or intersection not in index:
                msg = f"{first} and {second}: union or intersection missing."
                raise NotALatticeError(msg)

            leq[row, col] = first <= second
            join[row, col] = index[union]
            meet[row, col] = index[intersection]

    return FiniteLattice(FinitePoset(leq), meet, join, members)
