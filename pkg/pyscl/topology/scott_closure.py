from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.order.down_set import down_set


def scott_closure(poset: FinitePoset, elems: ElementSet) -> ElementSet:
    """
    Returns the smallest Scott closed set containing ``elems``. For a finite
    poset this is the lower set :math:`{\\downarrow} A`: a lower set already
    contains the supremum of each of its directed subsets.
    """
    return down_set(poset, elems, "down")
