import numpy as np

from pyscl.FinitePoset import FinitePoset


def add_top(poset: FinitePoset) -> FinitePoset:
    """
    Returns :math:`P^*`, the poset obtained by adding a new element above all
    elements of :math:`P`. The new top element has index ``poset.size``.
    """
    size = poset.size
    leq = np.ones((size + 1, size + 1), dtype=bool)
    leq[:size, :size] = poset.leq
    leq[size, :size] = False
    return FinitePoset(leq)
