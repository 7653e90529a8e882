from functools import lru_cache

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.order.directed import directed_subsets, directed_sup
from pyscl.order.down_set import down_set


@lru_cache(maxsize=64)
def directed_with_sups(poset: FinitePoset) -> tuple[tuple[int, int], ...]:
    """
    Bit-vectors of all nonempty directed subsets of the poset, each paired
    with its supremum. Cached per poset, since every definitional domain
    check quantifies over this collection.
    """
    return tuple(
        (directed.bits, directed_sup(poset, directed))
        for directed in directed_subsets(poset)
    )


def way_below(poset: FinitePoset, elems: ElementSet, x: int) -> bool:
    """
    Decides :math:`F \\ll x` by its definition: for every nonempty directed
    :math:`D` with :math:`x \\le \\bigvee D`, :math:`D` meets
    :math:`{\\uparrow} F`.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    elems
        The finite set :math:`F`.
    x
        The element :math:`x`.

    Returns
    -------
    bool
        Whether :math:`F` is way below :math:`x`.
    """
    upper = down_set(poset, elems, "up").bits

    for bits, sup in directed_with_sups(poset):
        if poset.is_leq(x, sup) and not bits & upper:
            return False

    return True


def way_below_fast(poset: FinitePoset, elems: ElementSet, x: int) -> bool:
    """
    Decides :math:`F \\ll x` for a finite poset as
    :math:`{\\uparrow} x \\subseteq {\\uparrow} F`. This agrees with
    :func:`way_below`.
    """
    upper = down_set(poset, elems, "up").bits
    return poset.up_masks[x] & ~upper == 0
