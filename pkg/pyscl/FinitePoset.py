from __future__ import annotations

from functools import cached_property
from typing import Iterator

import numpy as np

from pyscl.ElementSet import ElementSet
from pyscl.exceptions import CycleError


class FinitePoset:
    """
    An explicit finite partial order on the elements ``0, ..., size - 1``.
    Instances are immutable: the relation matrix is stored read-only, and
    derived data is computed lazily and cached.

    Since every directed subset of a finite poset contains its own greatest
    element, every finite poset is a dcpo. Its Scott topology is the
    Alexandrov topology: the closed sets are exactly the lower sets.

    Parameters
    ----------
    leq
        Square boolean matrix, where ``leq[x, y]`` is ``True`` iff
        :math:`x \\le y`.

    Raises
    ------
    ValueError
        When ``leq`` is not square, or the relation is not reflexive or not
        transitive.
    CycleError
        When the relation is not antisymmetric.
    """

    def __init__(self, leq: np.ndarray):
        leq = np.array(leq, dtype=bool)

        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError(f"Expected a square matrix; got {leq.shape}.")

        if not np.all(np.diag(leq)):
            raise ValueError("Order relation is not reflexive.")

        off_diagonal = leq & leq.T & ~np.eye(len(leq), dtype=bool)
        if np.any(off_diagonal):
            raise CycleError("Order relation is not antisymmetric.")

        if np.any(_compose(leq, leq) & ~leq):
            raise ValueError("Order relation is not transitive.")

        leq.flags.writeable = False
        self._leq = leq

    @property
    def leq(self) -> np.ndarray:
        """
        Read-only boolean relation matrix.
        """
        return self._leq

    @property
    def size(self) -> int:
        return len(self._leq)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def is_leq(self, x: int, y: int) -> bool:
        return bool(self._leq[x, y])

    def comparable(self, x: int, y: int) -> bool:
        return bool(self._leq[x, y] or self._leq[y, x])

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """
        Bit-vector of the principal lower set of each element.
        """
        return tuple(_mask(col) for col in self._leq.T)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        """
        Bit-vector of the principal upper set of each element.
        """
        return tuple(_mask(row) for row in self._leq)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """
        The cover pairs :math:`(x, y)` with :math:`x < y` and nothing in
        between, in lexicographic order.
        """
        lt = self._leq & ~np.eye(self.size, dtype=bool)
        between = _compose(lt, lt)
        cover = lt & ~between
        return tuple((int(x), int(y)) for x, y in np.argwhere(cover))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """
        Length of the longest chain ending in each element, where minimal
        elements have height zero.
        """
        heights = [0] * self.size
        order = sorted(self, key=lambda x: bin(self.down_masks[x]).count("1"))
        for x in order:
            below = [heights[y] + 1 for y, z in self.covers if z == x]
            heights[x] = max(below, default=0)

        return tuple(heights)

    def principal_down(self, x: int) -> ElementSet:
        return ElementSet(self.size, self.down_masks[x])

    def principal_up(self, x: int) -> ElementSet:
        return ElementSet(self.size, self.up_masks[x])

    def relabel(self, perm: list[int]) -> FinitePoset:
        """
        Returns the isomorphic poset in which element ``x`` is renamed to
        ``perm[x]``.
        """
        inv = np.argsort(perm)
        return FinitePoset(self._leq[np.ix_(inv, inv)])

    def key(self) -> bytes:
        """
        Byte string identifying this labelled relation.
        """
        packed = np.packbits(self._leq).tobytes()
        return self.size.to_bytes(4, "little") + packed

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.size == other.size
            and bool(np.array_equal(self._leq, other._leq))
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __getstate__(self):
        return self._leq.copy()

    def __setstate__(self, leq):
        leq.flags.writeable = False
        self._leq = leq

    def __repr__(self) -> str:
        return f"FinitePoset(size={self.size}, covers={list(self.covers)})"


def _mask(row: np.ndarray) -> int:
    return sum(1 << int(idx) for idx in np.flatnonzero(row))


def _compose(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    # Boolean matrix product. Floating point keeps this on the BLAS path,
    # and the counts involved are small enough to be exact.
    prod = first.astype(np.float64) @ second.astype(np.float64)
    return prod > 0
