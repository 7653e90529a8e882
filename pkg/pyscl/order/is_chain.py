from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset


def is_chain(poset: FinitePoset, elems: ElementSet) -> bool:
    """
    Returns whether all members of ``elems`` are pairwise comparable. The
    empty set is (vacuously) a chain.
    """
    for x in elems:
        comparable = poset.down_masks[x] | poset.up_masks[x]
        if elems.bits & ~comparable:
            return False

    return True
