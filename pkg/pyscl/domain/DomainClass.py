from __future__ import annotations

from dataclasses import asdict, dataclass

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.domain.FinFamily import fin_sets, upper_sets
from pyscl.domain.way_below import way_below
from pyscl.order.bounds import least_upper_bound
from pyscl.order.directed import is_directed


@dataclass(frozen=True)
class DomainClass:
    """
    Continuity flags of a dcpo.
    """

    continuous: bool
    quasicontinuous: bool

    def inconsistencies(self) -> list[str]:
        """
        Returns the implications between the flags that do not hold. Every
        continuous dcpo is quasicontinuous.
        """
        if self.continuous and not self.quasicontinuous:
            return ["Continuous dcpo that is not quasicontinuous."]

        return []

    def to_dict(self) -> dict[str, bool]:
        return asdict(self)


def is_continuous(poset: FinitePoset) -> bool:
    """
    Checks that, for every :math:`x`, the set
    :math:`\\{y: \\{y\\} \\ll x\\}` is directed and has supremum :math:`x`.
    """
    for x in poset:
        idcs = [
            y
            for y in poset
            if way_below(poset, ElementSet.from_indices(poset.size, [y]), x)
        ]
        approx = ElementSet.from_indices(poset.size, idcs)

        if not is_directed(poset, approx):
            return False

        if least_upper_bound(poset, approx) != x:
            return False

    return True


def is_quasicontinuous(poset: FinitePoset) -> bool:
    """
    Checks that, for every :math:`x`, :math:`\\mathrm{fin}(x)` is directed,
    and that for every :math:`y` with :math:`x \\not\\le y` some
    :math:`F \\in \\mathrm{fin}(x)` has :math:`y \\notin {\\uparrow} F`.

    Directedness is with respect to :math:`F_1 \\sqsubseteq F_2` iff
    :math:`{\\uparrow} F_2 \\subseteq {\\uparrow} F_1`, so the family is
    represented by its distinct upper sets.
    """
    for x in poset:
        uppers = upper_sets(poset, fin_sets(poset, x, antichains_only=True))

        if not uppers:
            return False

        for first in uppers:
            for second in uppers:
                common = first & second
                if not any(upper & ~common == 0 for upper in uppers):
                    return False

        for y in poset:
            if poset.is_leq(x, y):
                continue

            if all(upper >> y & 1 for upper in uppers):
                return False

    return True


def domain_class(poset: FinitePoset) -> DomainClass:
    """
    Determines whether the dcpo is continuous and whether it is
    quasicontinuous. Both flags are computed from their definitions.
    """
    return DomainClass(is_continuous(poset), is_quasicontinuous(poset))
