from itertools import groupby, permutations, product

from pyscl.FinitePoset import FinitePoset
from pyscl.order.isomorphism import _invariants


def canonical_form(
    poset: FinitePoset,
) -> tuple[FinitePoset, tuple[int, ...]]:
    """
    Computes a canonical relabelling of the given poset: isomorphic posets
    have identical canonical forms.

    Elements are first sorted by their invariants (height, principal set
    sizes, cover counts), which are labelling-independent. Only permutations
    within blocks of equal invariants are then tried, and the relabelling
    with the lexicographically smallest relation matrix is chosen. Since
    height comes first, the canonical labelling is a linear extension.

    Returns
    -------
    tuple
        The canonical poset, and the permutation ``perm`` such that
        ``poset.relabel(perm)`` equals the canonical poset.
    """
    invs = _invariants(poset)
    ordered = sorted(poset, key=lambda x: invs[x])
    blocks = [list(grp) for _, grp in groupby(ordered, key=lambda x: invs[x])]

    leq = poset.leq.tolist()
    best_key = None
    best_order: list[int] = []

    for choice in product(*(permutations(block) for block in blocks)):
        order = [x for block in choice for x in block]
        key = tuple(leq[x][y] for x in order for y in order)

        if best_key is None or key < best_key:
            best_key = key
            best_order = order

    perm = [0] * poset.size
    for new, old in enumerate(best_order):
        perm[old] = new

    return poset.relabel(perm), tuple(perm)
