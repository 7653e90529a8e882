from functools import lru_cache

import numpy as np

from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_ENUMERATION_SIZE
from pyscl.exceptions import BoundExceededError
from pyscl.order.canonical import canonical_form
from pyscl.order.lower_sets import lower_set_masks


def _extensions(poset: FinitePoset) -> list[FinitePoset]:
    size = poset.size
    result = []

    for mask in lower_set_masks(poset):
        leq = np.zeros((size + 1, size + 1), dtype=bool)
        leq[:size, :size] = poset.leq
        leq[size, size] = True
        leq[[x for x in range(size) if mask >> x & 1], size] = True
        result.append(FinitePoset(leq))

    return result


@lru_cache
def _level(size: int) -> tuple[FinitePoset, ...]:
    if size == 0:
        return (FinitePoset(np.zeros((0, 0), dtype=bool)),)

    classes: dict[bytes, FinitePoset] = {}
    for poset in _level(size - 1):
        for extended in _extensions(poset):
            canonical, _ = canonical_form(extended)
            classes.setdefault(canonical.key(), canonical)

    return tuple(classes[key] for key in sorted(classes))


def enumerate_posets(
    size: int, max_size: int = MAX_ENUMERATION_SIZE
) -> list[FinitePoset]:
    """
    Enumerates all posets with the given number of elements, up to
    isomorphism.

    Every poset on :math:`n + 1` elements arises from one on :math:`n`
    elements by adding a new maximal element above some lower set. The
    enumeration grows the canonical representatives one element at a time
    in this way, and keeps one canonical form per isomorphism class.

    Parameters
    ----------
    size
        Number of elements :math:`n \\ge 0`.
    max_size
        Maximum size that may be enumerated. Default
        :data:`~pyscl.constants.MAX_ENUMERATION_SIZE`.

    Returns
    -------
    list
        Canonical representatives, one per isomorphism class, sorted by
        their canonical relation matrices. The order is deterministic.

    Raises
    ------
    ValueError
        When ``size`` is negative.
    BoundExceededError
        When ``size`` exceeds ``max_size``.
    """
    if size < 0:
        raise ValueError("Negative poset size not understood.")

    if size > max_size:
        msg = f"Cannot enumerate posets of size {size} > {max_size}."
        raise BoundExceededError(msg)

    return list(_level(size))


def poset_universe(
    bound: int, max_size: int = MAX_ENUMERATION_SIZE
) -> list[FinitePoset]:
    """
    Returns the canonical representatives of all posets with between one and
    ``bound`` elements, ordered by size first. For ``bound = 5`` these are
    :math:`1 + 2 + 5 + 16 + 63 = 87` classes.
    """
    return [
        poset
        for size in range(1, bound + 1)
        for poset in enumerate_posets(size, max_size)
    ]
