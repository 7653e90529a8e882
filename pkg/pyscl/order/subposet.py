from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset


def subposet(
    poset: FinitePoset, elems: ElementSet
) -> tuple[FinitePoset, list[int]]:
    """
    Returns the sub-poset induced on the given elements, together with the
    list mapping each sub-poset element back to its element in ``poset``.
    Elements keep their relative order.
    """
    idcs = list(elems)
    leq = poset.leq[idcs][:, idcs]
    return FinitePoset(leq), idcs
