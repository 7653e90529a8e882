from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.domain.DomainClass import is_quasicontinuous
from pyscl.order.is_chain import is_chain
from pyscl.order.subposet import subposet


@dataclass(frozen=True)
class SpecialElements:
    """
    The down-linear and quasicontinuous elements of a dcpo. Unpacks as the
    pair ``(down_linear, quasicontinuous)``.

    Parameters
    ----------
    down_linear
        Elements :math:`a` whose principal lower set :math:`{\\downarrow} a`
        is a chain.
    quasicontinuous
        Elements :math:`x` for which the sub-dcpo :math:`{\\downarrow} x` is
        quasicontinuous.
    """

    down_linear: ElementSet
    quasicontinuous: ElementSet

    def inconsistencies(self) -> list[str]:
        """
        Returns a message for every down-linear element that is not
        quasicontinuous. A chain is continuous, hence quasicontinuous.
        """
        return [
            f"Down-linear element {x} is not quasicontinuous."
            for x in self.down_linear
            if x not in self.quasicontinuous
        ]

    def __iter__(self) -> Iterator[ElementSet]:
        return iter((self.down_linear, self.quasicontinuous))


def down_linear_elements(poset: FinitePoset) -> ElementSet:
    idcs = [x for x in poset if is_chain(poset, poset.principal_down(x))]
    return ElementSet.from_indices(poset.size, idcs)


def quasicontinuous_elements(poset: FinitePoset) -> ElementSet:
    idcs = []
    for x in poset:
        below, _ = subposet(poset, poset.principal_down(x))
        if is_quasicontinuous(below):
            idcs.append(x)

    return ElementSet.from_indices(poset.size, idcs)


def special_elements(poset: FinitePoset) -> SpecialElements:
    """
    Computes the down-linear elements, and the elements whose principal
    lower set is a quasicontinuous sub-dcpo.
    """
    return SpecialElements(
        down_linear_elements(poset), quasicontinuous_elements(poset)
    )
