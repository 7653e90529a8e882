from collections import Counter

from pyscl.ElementSet import ElementSet
from pyscl.FiniteLattice import FiniteLattice
from pyscl.FinitePoset import FinitePoset
from pyscl.order.subposet import subposet


def join_irreducible_elements(lattice: FiniteLattice) -> ElementSet:
    """
    Returns the elements with exactly one lower cover. The bottom element has
    no lower covers, so it is never join-irreducible.
    """
    lower_covers = Counter(y for _, y in lattice.order.covers)
    idcs = [x for x in lattice if lower_covers[x] == 1]
    return ElementSet.from_indices(lattice.size, idcs)


def join_irreducibles(lattice: FiniteLattice) -> FinitePoset:
    """
    Returns the sub-poset of join-irreducible elements. For a finite
    distributive lattice :math:`L`, the lattice of lower sets of this poset
    is isomorphic to :math:`L`; in particular, for :math:`L = C_\\sigma(P)`
    the result is isomorphic to :math:`P`.
    """
    poset, _ = subposet(lattice.order, join_irreducible_elements(lattice))
    return poset
