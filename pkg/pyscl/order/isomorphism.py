from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from pyscl.FinitePoset import FinitePoset


@dataclass(frozen=True)
class OrderIsomorphism:
    """
    An order isomorphism between two finite posets.

    Parameters
    ----------
    source
        The domain poset :math:`P`.
    target
        The codomain poset :math:`Q`.
    forward
        The bijection, as a tuple: element ``x`` of ``source`` maps to
        ``forward[x]`` in ``target``.

    Raises
    ------
    ValueError
        When ``forward`` is not a bijection, or it or its inverse is not
        monotone.
    """

    source: FinitePoset
    target: FinitePoset
    forward: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.forward) != list(range(self.target.size)):
            raise ValueError("Forward map is not a bijection.")

        if self.source.size != self.target.size:
            raise ValueError("Posets have different sizes.")

        for x in self.source:
            for y in self.source:
                fx, fy = self.forward[x], self.forward[y]
                if self.source.is_leq(x, y) != self.target.is_leq(fx, fy):
                    raise ValueError("Map does not preserve and reflect ≤.")

    def __call__(self, x: int) -> int:
        return self.forward[x]

    def inverse(self) -> OrderIsomorphism:
        backward = [0] * len(self.forward)
        for x, fx in enumerate(self.forward):
            backward[fx] = x

        return OrderIsomorphism(self.target, self.source, tuple(backward))


def _invariants(poset: FinitePoset) -> list[tuple[int, ...]]:
    # Labelling-independent vertex invariants: height, sizes of the principal
    # lower and upper sets, and numbers of lower and upper covers.
    lower_covers = Counter(y for _, y in poset.covers)
    upper_covers = Counter(x for x, _ in poset.covers)
    return [
        (
            poset.heights[x],
            bin(poset.down_masks[x]).count("1"),
            bin(poset.up_masks[x]).count("1"),
            lower_covers[x],
            upper_covers[x],
        )
        for x in poset
    ]


def find_order_isomorphism(
    first: FinitePoset, second: FinitePoset
) -> Optional[tuple[int, ...]]:
    """
    Backtracking search for an order isomorphism between two posets. Vertices
    are only mapped onto vertices with equal invariants, and each extension
    of the partial map is checked against all previously mapped vertices.

    Returns
    -------
    tuple or None
        The forward map, if the posets are isomorphic; ``None`` otherwise.
    """
    if first.size != second.size:
        return None

    inv1 = _invariants(first)
    inv2 = _invariants(second)
    if Counter(inv1) != Counter(inv2):
        return None

    # Map the most constrained vertices first: rare invariants, then low.
    freq = Counter(inv1)
    order = sorted(first, key=lambda x: (freq[inv1[x]], inv1[x], x))
    candidates = {
        x: [y for y in second if inv2[y] == inv1[x]] for x in first
    }

    forward = [-1] * first.size
    used = [False] * second.size
    leq1, leq2 = first.leq.tolist(), second.leq.tolist()

    def extend(depth: int) -> bool:
        if depth == len(order):
            return True

        x = order[depth]
        for y in candidates[x]:
            if used[y]:
                continue

            if all(
                leq1[x][prev] == leq2[y][forward[prev]]
                and leq1[prev][x] == leq2[forward[prev]][y]
                for prev in order[:depth]
            ):
                forward[x] = y
                used[y] = True

                if extend(depth + 1):
                    return True

                used[y] = False

        forward[x] = -1
        return False

    if extend(0):
        return tuple(forward)

    return None


def poset_isomorphism(
    first: FinitePoset, second: FinitePoset
) -> Optional[OrderIsomorphism]:
    """
    Decides whether two finite posets are isomorphic, and returns a witness
    if so. The decision is exact.

    Parameters
    ----------
    first
        The poset :math:`P`.
    second
        The poset :math:`Q`.

    Returns
    -------
    OrderIsomorphism or None
        An isomorphism :math:`P \\to Q` if :math:`P \\cong Q`, else ``None``.
    """
    forward = find_order_isomorphism(first, second)
    if forward is None:
        return None

    return OrderIsomorphism(first, second, forward)
