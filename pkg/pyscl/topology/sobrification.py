from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.topology.ClosedFamily import ClosedFamily, scott_closed_family
from pyscl.topology.IrrPoset import IrrPoset, irreducible_closed


@dataclass(frozen=True)
class Sobrification:
    """
    The sobrification of a Scott space :math:`\\Sigma P`: the set
    :math:`\\mathrm{Irr}(\\Sigma P)` with the hull-kernel topology, together
    with the point map :math:`\\eta(x) = cl(\\{x\\})`.

    Parameters
    ----------
    irr
        The irreducible closed sets of :math:`\\Sigma P`.
    closed
        The distinct hull-kernel closed sets :math:`h(A)`, as a closed family
        over ``irr.order``.
    eta
        ``eta[x]`` is the index in ``irr.elements`` of the closure of
        :math:`x`.
    """

    irr: IrrPoset
    closed: ClosedFamily
    eta: tuple[int, ...]

    def is_injective(self) -> bool:
        return len(set(self.eta)) == len(self.eta)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.eta) == len(self.irr)


def hull(irr: IrrPoset, elems: ElementSet) -> ElementSet:
    """
    Returns the hull-kernel closed set :math:`h(A)`, the set of irreducible
    closed sets contained in :math:`A`, as a set of indices into
    ``irr.elements``.
    """
    idcs = [
        idx for idx, irr_set in enumerate(irr.elements) if irr_set <= elems
    ]
    return ElementSet.from_indices(len(irr), idcs)


def hull_kernel_sobrification(
    poset: FinitePoset,
    family: Optional[ClosedFamily] = None,
    max_members: int = MAX_FAMILY_SIZE,
) -> Sobrification:
    """
    Computes the sobrification of :math:`\\Sigma P` as
    :math:`\\mathrm{Irr}(\\Sigma P)` with the hull-kernel topology, whose
    closed sets are :math:`h(A) = \\{F \\in \\mathrm{Irr}: F \\subseteq A\\}`
    for Scott closed :math:`A`, and the map :math:`\\eta(x) = cl(\\{x\\})`.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    family
        Its Scott closed sets, if already computed.
    max_members
        Cap passed to :func:`scott_closed_family` when ``family`` is not
        given.

    Returns
    -------
    Sobrification
        The sobrification and its point map.
    """
    if family is None:
        family = scott_closed_family(poset, max_members)

    irr = irreducible_closed(poset, family)
    hulls = {hull(irr, member) for member in family}
    members = tuple(sorted(hulls, key=ElementSet.sort_key))
    closed = ClosedFamily(irr.order, members)

    eta = []
    for x in poset:
        point = ElementSet.from_indices(poset.size, [x])
        idx = irr.index(family.closure(point))

        if idx is None:  # closure of a point is always irreducible
            raise RuntimeError(f"Closure of {x} is not irreducible.")

        eta.append(idx)

    return Sobrification(irr, closed, tuple(eta))
