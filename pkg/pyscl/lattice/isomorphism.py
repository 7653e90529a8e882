from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from pyscl.FiniteLattice import FiniteLattice
from pyscl.order.isomorphism import find_order_isomorphism


@dataclass(frozen=True)
class LatticeIsomorphism:
    """
    A lattice isomorphism: a bijection that preserves and reflects the order,
    and hence also meets and joins.

    Parameters
    ----------
    source
        The domain lattice.
    target
        The codomain lattice.
    forward
        Element ``x`` of ``source`` maps to ``forward[x]`` in ``target``.

    Raises
    ------
    ValueError
        When ``forward`` is not a bijection, or does not preserve meets and
        joins.
    """

    source: FiniteLattice
    target: FiniteLattice
    forward: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.forward) != list(range(self.target.size)):
            raise ValueError("Forward map is not a bijection.")

        if self.source.size != self.target.size:
            raise ValueError("Lattices have different sizes.")

        fwd = np.array(self.forward)
        src, tgt = self.source, self.target

        if not np.array_equal(fwd[src.join], tgt.join[np.ix_(fwd, fwd)]):
            raise ValueError("Map does not preserve joins.")

        if not np.array_equal(fwd[src.meet], tgt.meet[np.ix_(fwd, fwd)]):
            raise ValueError("Map does not preserve meets.")

    def __call__(self, x: int) -> int:
        return self.forward[x]


def lattice_isomorphic(
    first: FiniteLattice, second: FiniteLattice
) -> Optional[LatticeIsomorphism]:
    """
    Decides whether two finite lattices are isomorphic, and returns a witness
    if so. An order isomorphism between lattices is a lattice isomorphism, so
    this searches for an order isomorphism.

    Returns
    -------
    LatticeIsomorphism or None
        A witness if the lattices are isomorphic, else ``None``.
    """
    forward = find_order_isomorphism(first.order, second.order)
    if forward is None:
        return None

    return LatticeIsomorphism(first, second, forward)
