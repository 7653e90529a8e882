from functools import lru_cache
from typing import Iterable

from pyscl.FiniteLattice import FiniteLattice
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_ENUMERATION_SIZE
from pyscl.exceptions import BoundExceededError
from pyscl.lattice.isomorphism import lattice_isomorphic
from pyscl.lattice.lattice_of import lattice_of
from pyscl.order.canonical import canonical_form
from pyscl.order.enumerate_posets import poset_universe
from pyscl.order.isomorphism import poset_isomorphism
from pyscl.topology.ClosedFamily import scott_closed_family


@lru_cache(maxsize=1024)
def _scott_lattice(poset: FinitePoset) -> FiniteLattice:
    return lattice_of(scott_closed_family(poset))


def _distinguished(first: FinitePoset, second: FinitePoset) -> bool:
    # C(first) iso C(second) implies first iso second.
    lattices = _scott_lattice(first), _scott_lattice(second)
    if lattice_isomorphic(*lattices) is None:
        return True

    return poset_isomorphism(first, second) is not None


def m_flat(
    class_members: Iterable[FinitePoset],
    universe_bound: int,
    max_size: int = MAX_ENUMERATION_SIZE,
) -> list[FinitePoset]:
    """
    Computes :math:`M^\\flat` relative to the finite universe of canonical
    posets with one to ``universe_bound`` elements: all :math:`P` such that,
    for every :math:`Q \\in M`, :math:`C_\\sigma(P) \\cong C_\\sigma(Q)`
    implies :math:`P \\cong Q`.

    Parameters
    ----------
    class_members
        The class :math:`M`, as posets of at most ``universe_bound``
        elements. They need not be canonical.
    universe_bound
        Largest poset size in the universe.
    max_size
        Maximum enumeration size. Default
        :data:`~pyscl.constants.MAX_ENUMERATION_SIZE`.

    Returns
    -------
    list
        Members of the universe in :math:`M^\\flat`, in universe order.

    Raises
    ------
    BoundExceededError
        When a class member is larger than ``universe_bound``, or
        ``universe_bound`` exceeds ``max_size``.
    """
    members = list(class_members)
    if any(member.size > universe_bound for member in members):
        msg = f"Class member larger than universe bound {universe_bound}."
        raise BoundExceededError(msg)

    universe = poset_universe(universe_bound, max_size)
    return [
        poset
        for poset in universe
        if all(_distinguished(poset, member) for member in members)
    ]


def is_reflexive(
    class_members: Iterable[FinitePoset],
    universe_bound: int,
    max_size: int = MAX_ENUMERATION_SIZE,
) -> bool:
    """
    Returns whether :math:`M^{\\flat\\flat} = M` on the finite universe of
    posets with one to ``universe_bound`` elements. Members are compared up
    to isomorphism.
    """
    members = list(class_members)
    flat = m_flat(members, universe_bound, max_size)
    flat_flat = m_flat(flat, universe_bound, max_size)

    def keys(posets: list[FinitePoset]) -> set[bytes]:
        return {canonical_form(poset)[0].key() for poset in posets}

    return keys(flat_flat) == keys(members)
