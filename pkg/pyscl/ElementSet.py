from __future__ import annotations

from typing import Iterable, Iterator


class ElementSet:
    """
    An immutable set of elements of a finite carrier ``{0, ..., size - 1}``,
    stored as a bit-vector. Bit ``i`` is set when element ``i`` is a member.

    Parameters
    ----------
    size
        Size of the carrier.
    bits
        Membership bit-vector. Defaults to zero (the empty set).

    Raises
    ------
    ValueError
        When ``size`` is negative, or ``bits`` has bits set outside the
        carrier.
    """

    __slots__ = ["_size", "_bits"]

    def __init__(self, size: int, bits: int = 0):
        if size < 0:
            raise ValueError("Negative carrier size not understood.")

        if bits < 0 or bits >> size:
            raise ValueError("Membership bits outside of the carrier.")

        self._size = size
        self._bits = bits

    @classmethod
    def from_indices(cls, size: int, indices: Iterable[int]) -> ElementSet:
        """
        Creates the set containing the given element indices.

        Raises
        ------
        IndexError
            When an index is not an element of the carrier.
        """
        bits = 0
        for idx in indices:
            if not 0 <= idx < size:
                raise IndexError(f"Element {idx} not in carrier of {size}.")

            bits |= 1 << idx

        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> ElementSet:
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> ElementSet:
        return cls(size, (1 << size) - 1)

    @property
    def size(self) -> int:
        """
        Size of the carrier this set lives in.
        """
        return self._size

    @property
    def bits(self) -> int:
        """
        Membership bit-vector.
        """
        return self._bits

    def count(self) -> int:
        """
        Returns the number of members.
        """
        return bin(self._bits).count("1")

    def is_empty(self) -> bool:
        return self._bits == 0

    def issubset(self, other: ElementSet) -> bool:
        return self._bits & ~other._bits == 0

    def sort_key(self) -> tuple[int, int]:
        """
        Key ordering sets by cardinality first, and by bit-vector value next.
        """
        return self.count(), self._bits

    def __len__(self) -> int:
        return self.count()

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        idx = 0
        while bits:
            if bits & 1:
                yield idx

            bits >>= 1
            idx += 1

    def __contains__(self, idx: object) -> bool:
        if not isinstance(idx, int) or idx < 0:
            return False

        return bool(self._bits >> idx & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ElementSet)
            and self._size == other._size
            and self._bits == other._bits
        )

    def __hash__(self) -> int:
        return hash((self._size, self._bits))

    def __le__(self, other: ElementSet) -> bool:
        return self.issubset(other)

    def __lt__(self, other: ElementSet) -> bool:
        return self.issubset(other) and self._bits != other._bits

    def _check(self, other: ElementSet):
        if self._size != other._size:
            msg = f"Carrier sizes {self._size} and {other._size} differ."
            raise ValueError(msg)

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self._size, self._bits | other._bits)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self._size, self._bits & other._bits)

    def __xor__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self._size, self._bits ^ other._bits)

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self._size, self._bits & ~other._bits)

    def __invert__(self) -> ElementSet:
        return ElementSet(self._size, ~self._bits & ((1 << self._size) - 1))

    def __getstate__(self):
        return self._size, self._bits

    def __setstate__(self, state):
        self._size, self._bits = state

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"
