import pathlib
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from pyscl import FinitePoset
from pyscl.read import read as _read


@lru_cache
def read(where: str) -> FinitePoset:
    """
    Lightweight wrapper around ``pyscl.read.read()``, reading poset files
    relative to the tests directory.
    """
    this_dir = pathlib.Path(__file__).parent
    return _read(this_dir / where)


@lru_cache
def labelled_posets(size: int) -> tuple[FinitePoset, ...]:
    """
    Brute-force oracle: all partial orders on ``size`` labelled points,
    found by testing every relation on the off-diagonal pairs for
    antisymmetry and transitivity. Only feasible for small sizes.
    """
    pairs = [(x, y) for x in range(size) for y in range(size) if x != y]
    result = []

    for choice in product([False, True], repeat=len(pairs)):
        leq = np.eye(size, dtype=bool)
        for (x, y), chosen in zip(pairs, choice):
            leq[x, y] = chosen

        if np.any(leq & leq.T & ~np.eye(size, dtype=bool)):
            continue

        composed = (leq.astype(int) @ leq.astype(int)) > 0
        if np.any(composed & ~leq):
            continue

        result.append(FinitePoset(leq))

    return tuple(result)


def brute_force_key(poset: FinitePoset) -> bytes:
    """
    Isomorphism invariant that is complete: the lexicographically smallest
    relation matrix over all relabellings.
    """
    perms = permutations(range(poset.size))
    return min(poset.relabel(list(perm)).key() for perm in perms)


def brute_force_isomorphic(first: FinitePoset, second: FinitePoset) -> bool:
    """
    Decides isomorphism by trying every bijection.
    """
    if first.size != second.size:
        return False

    return brute_force_key(first) == brute_force_key(second)


def num_classes(size: int) -> int:
    """
    Number of isomorphism classes of posets on ``size`` points, by the
    labelled brute-force oracle.
    """
    return len({brute_force_key(poset) for poset in labelled_posets(size)})
