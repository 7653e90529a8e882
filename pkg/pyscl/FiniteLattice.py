from __future__ import annotations

from functools import reduce
from typing import Iterator, Optional

import numpy as np

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import NotALatticeError
from pyscl.order.bounds import greatest_lower_bound, least_upper_bound


class FiniteLattice:
    """
    A finite lattice, given by its order and its meet and join tables.

    Parameters
    ----------
    order
        The lattice order.
    meet
        Integer table with ``meet[x, y]`` the greatest lower bound of ``x``
        and ``y``.
    join
        Integer table with ``join[x, y]`` the least upper bound of ``x`` and
        ``y``.
    labels
        Optional element labels. A lattice of closed sets uses the closed
        sets themselves as labels.

    Raises
    ------
    NotALatticeError
        When the order is empty, or the tables do not contain the greatest
        lower and least upper bounds of each pair.
    ValueError
        When the tables or labels do not match the order's size.
    """

    def __init__(
        self,
        order: FinitePoset,
        meet: np.ndarray,
        join: np.ndarray,
        labels: Optional[tuple[ElementSet, ...]] = None,
    ):
        size = order.size
        meet = np.array(meet, dtype=int)
        join = np.array(join, dtype=int)

        if size == 0:
            raise NotALatticeError("The empty poset is not a lattice.")

        if meet.shape != (size, size) or join.shape != (size, size):
            raise ValueError("Operation tables do not match the order.")

        if np.any((meet < 0) | (meet >= size) | (join < 0) | (join >= size)):
            raise ValueError("Operation tables reference unknown elements.")

        if labels is not None and len(labels) != size:
            raise ValueError("Labels do not match the order.")

        # z is above x and y iff z is above join[x, y], and dually for meet.
        leq = order.leq
        upper = leq[:, None, :] & leq[None, :, :]
        lower = leq.T[:, None, :] & leq.T[None, :, :]

        if not np.array_equal(upper, leq[join]):
            raise NotALatticeError("Join table is not the least upper bound.")

        if not np.array_equal(lower, leq.T[meet]):
            msg = "Meet table is not the greatest lower bound."
            raise NotALatticeError(msg)

        meet.flags.writeable = False
        join.flags.writeable = False

        self._order = order
        self._meet = meet
        self._join = join
        self._labels = labels
        self._bottom = reduce(lambda x, y: int(meet[x, y]), order)
        self._top = reduce(lambda x, y: int(join[x, y]), order)

    @classmethod
    def from_order(
        cls,
        order: FinitePoset,
        labels: Optional[tuple[ElementSet, ...]] = None,
    ) -> FiniteLattice:
        """
        Computes the meet and join tables of the given order.

        Raises
        ------
        NotALatticeError
            When some pair has no greatest lower or least upper bound.
        """
        size = order.size
        meet = np.zeros((size, size), dtype=int)
        join = np.zeros((size, size), dtype=int)

        for x in order:
            for y in order:
                pair = ElementSet.from_indices(size, [x, y])
                glb = greatest_lower_bound(order, pair)
                lub = least_upper_bound(order, pair)

                if glb is None or lub is None:
                    msg = f"Elements {x} and {y} lack a meet or join."
                    raise NotALatticeError(msg)

                meet[x, y] = glb
                join[x, y] = lub

        return cls(order, meet, join, labels)

    @property
    def order(self) -> FinitePoset:
        return self._order

    @property
    def meet(self) -> np.ndarray:
        """
        Read-only meet table.
        """
        return self._meet

    @property
    def join(self) -> np.ndarray:
        """
        Read-only join table.
        """
        return self._join

    @property
    def labels(self) -> Optional[tuple[ElementSet, ...]]:
        return self._labels

    @property
    def size(self) -> int:
        return self._order.size

    @property
    def bottom(self) -> int:
        return self._bottom

    @property
    def top(self) -> int:
        return self._top

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self._order)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteLattice) and self._order == other._order

    def __hash__(self) -> int:
        return hash(self._order)

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size})"
