from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.exceptions import CycleError
from pyscl.order.bounds import least_upper_bound
from pyscl.order.directed import directed_subsets
from pyscl.topology.ClosedFamily import ClosedFamily, scott_closed_family
from pyscl.topology.IrrPoset import IrrPoset, irreducible_closed
from pyscl.topology.sobrification import hull


@dataclass(frozen=True)
class SpaceClassification:
    """
    Separation and sobriety properties of a finite space.

    Parameters
    ----------
    sober
        Every nonempty irreducible closed set is the closure of a unique
        point.
    bounded_sober
        As ``sober``, but only for irreducible closed sets that have an upper
        bound in the specialization order.
    t_d
        Every singleton is the intersection of an open and a closed set.
    d_space
        The space is :math:`T_0`, its specialization order is a dcpo, and
        closed sets contain the suprema of their directed subsets.
    scott_sobrificable
        Every Scott closed set of :math:`\\mathrm{Irr}(X)` is a hull-kernel
        closed set :math:`h(A)`.
    """

    sober: bool
    bounded_sober: bool
    t_d: bool
    d_space: bool
    scott_sobrificable: bool

    def inconsistencies(self) -> list[str]:
        """
        Returns the implications between the flags that do not hold. Sober
        spaces are bounded sober, and sober spaces are d-spaces.
        """
        msgs = []

        if self.sober and not self.bounded_sober:
            msgs.append("Sober space that is not bounded sober.")

        if self.sober and not self.d_space:
            msgs.append("Sober space that is not a d-space.")

        return msgs

    def all(self) -> bool:
        """
        Returns whether all flags are set.
        """
        return all(asdict(self).values())

    def to_dict(self) -> dict[str, bool]:
        return asdict(self)


def _point_closures(family: ClosedFamily) -> list[ElementSet]:
    size = family.base.size
    return [
        family.closure(ElementSet.from_indices(size, [x]))
        for x in range(size)
    ]


def _specialization(closures: list[ElementSet]) -> Optional[FinitePoset]:
    # x <= y iff x is in cl({y}). Only a partial order when the space is T0.
    size = len(closures)
    leq = np.zeros((size, size), dtype=bool)
    for y, closure in enumerate(closures):
        for x in closure:
            leq[x, y] = True

    try:
        return FinitePoset(leq)
    except CycleError:
        return None


def _generic_points(closures: list[ElementSet], elems: ElementSet) -> int:
    return sum(closure == elems for closure in closures)


def is_sober(irr: IrrPoset, closures: list[ElementSet]) -> bool:
    """
    Generic point search: every nonempty irreducible closed set must be the
    closure of exactly one point.
    """
    return all(_generic_points(closures, elems) == 1 for elems in irr.elements)


def is_bounded_sober(irr: IrrPoset, closures: list[ElementSet]) -> bool:
    """
    Generic point search, restricted to the irreducible closed sets that are
    bounded above in the specialization order. A set is bounded above by
    ``y`` when it is contained in :math:`cl(\\{y\\})`.
    """
    if len(set(closures)) != len(closures):  # not T0
        return False

    for elems in irr.elements:
        if not any(elems <= closure for closure in closures):
            continue

        if _generic_points(closures, elems) != 1:
            return False

    return True


def is_t_d(family: ClosedFamily) -> bool:
    """
    Checks that every singleton :math:`\\{x\\}` equals :math:`U \\cap C` for
    some open :math:`U` and closed :math:`C`.
    """
    size = family.base.size
    opens = family.opens()

    for x in range(size):
        point = ElementSet.from_indices(size, [x])
        pairs = ((opn, closed) for opn in opens for closed in family)
        if not any((opn & closed) == point for opn, closed in pairs):
            return False

    return True


def is_d_space(family: ClosedFamily, closures: list[ElementSet]) -> bool:
    """
    Checks that the space is :math:`T_0`, that every directed subset of the
    specialization order has a least upper bound, and that every closed set
    contains the least upper bounds of its directed subsets.
    """
    order = _specialization(closures)
    if order is None:
        return False

    for directed in directed_subsets(order):
        sup = least_upper_bound(order, directed)
        if sup is None:
            return False

        for closed in family:
            if directed <= closed and sup not in closed:
                return False

    return True


def is_scott_sobrificable(irr: IrrPoset, family: ClosedFamily) -> bool:
    """
    Compares every Scott closed set of :math:`\\mathrm{Irr}(X)` against the
    hull-kernel closed sets :math:`\\{h(A): A \\text{ closed}\\}`. The space
    is Scott-sobrificable iff each of them is such a hull.
    """
    hulls = {hull(irr, member) for member in family}
    irr_family = scott_closed_family(irr.order)
    return all(member in hulls for member in irr_family)


def classify_space(
    poset: FinitePoset,
    family: Optional[ClosedFamily] = None,
    max_members: int = MAX_FAMILY_SIZE,
) -> SpaceClassification:
    """
    Classifies the Scott space :math:`\\Sigma P`. Each flag is computed from
    its own definition, using only the closed sets of the space: none of them
    relies on the fact that finite Scott spaces are sober.

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
    SpaceClassification
        The five classification flags.
    """
    if family is None:
        family = scott_closed_family(poset, max_members)

    irr = irreducible_closed(poset, family)
    closures = _point_closures(family)

    return SpaceClassification(
        sober=is_sober(irr, closures),
        bounded_sober=is_bounded_sober(irr, closures),
        t_d=is_t_d(family),
        d_space=is_d_space(family, closures),
        scott_sobrificable=is_scott_sobrificable(irr, family),
    )
