from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.order.bounds import upper_bounds


def mub(poset: FinitePoset, elems: ElementSet) -> ElementSet:
    """
    Returns :math:`\\mathrm{mub}(A)`, the minimal elements of the set of
    upper bounds of :math:`A`. This is empty when :math:`A` has no upper
    bound.
    """
    upper = upper_bounds(poset, elems)
    idcs = [x for x in upper if upper.bits & poset.down_masks[x] == 1 << x]
    return ElementSet.from_indices(poset.size, idcs)


def mub_properties(poset: FinitePoset) -> tuple[bool, bool]:
    """
    Checks properties m and M by quantifying over all finite subsets
    :math:`A`. Property m holds when :math:`\\mathrm{mub}(A)` is complete:
    every upper bound of :math:`A` is above some minimal upper bound.
    Property M additionally requires every :math:`\\mathrm{mub}(A)` to be
    finite, which holds trivially in a finite poset.

    Returns
    -------
    tuple
        The flags ``(m, M)``.
    """
    complete = True

    for bits in range(1 << poset.size):
        elems = ElementSet(poset.size, bits)
        upper = upper_bounds(poset, elems)
        minimal = mub(poset, elems)

        covered = 0
        for x in minimal:
            covered |= poset.up_masks[x]

        if upper.bits & ~covered:
            complete = False
            break

    return complete, complete
