from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Literal, Optional

import numpy as np

from pyscl.exceptions import BoundExceededError

Family = Literal["johnstone", "kou"]


class Top:
    """
    The element added on top of a dcpo by :func:`with_top`.
    """

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Top)

    def __hash__(self) -> int:
        return hash(Top)

    def __repr__(self) -> str:
        return "top"


TOP = Top()


@dataclass(frozen=True)
class SymbolicDcpo:
    """
    An infinite dcpo, given by a decidable order predicate and a sampler that
    returns finite windows of elements.

    Parameters
    ----------
    name
        Name of the dcpo, e.g. ``'johnstone'``.
    family
        The construction the dcpo belongs to: ``'johnstone'`` or ``'kou'``.
        Star variants share the family of their base.
    leq
        The order predicate.
    sampler
        Maps a bound :math:`B \\ge 1` to a deterministic, duplicate-free list
        of elements.
    max_bound
        Default cap on the window bound.
    base
        For the star variants, the dcpo a top element was added to.

    Raises
    ------
    ValueError
        When the family or the cap are not understood.
    """

    name: str
    family: Family
    leq: Callable[[Any, Any], bool]
    sampler: Callable[[int], list[Any]]
    max_bound: int
    base: Optional[SymbolicDcpo] = None

    def __post_init__(self):
        if self.family not in ("johnstone", "kou"):
            raise ValueError(f"family = {self.family} not understood.")

        if self.max_bound < 1:
            raise ValueError("max_bound < 1 not understood.")

    @property
    def has_top(self) -> bool:
        return self.base is not None


@dataclass(frozen=True)
class Window:
    """
    A finite window of a symbolic dcpo, with the induced order relation.

    Parameters
    ----------
    elements
        The sampled elements.
    relation
        Boolean matrix with ``relation[i, j]`` iff
        ``elements[i] <= elements[j]``.
    """

    elements: tuple[Any, ...]
    relation: np.ndarray

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, elem: Any) -> int:
        return self.elements.index(elem)

    def down(self, idx: int) -> np.ndarray:
        """
        Indices of the window elements below element ``idx``.
        """
        return np.flatnonzero(self.relation[:, idx])

    def up(self, idx: int) -> np.ndarray:
        """
        Indices of the window elements above element ``idx``.
        """
        return np.flatnonzero(self.relation[idx])

    def is_chain(self, idcs: np.ndarray) -> bool:
        sub = self.relation[np.ix_(idcs, idcs)]
        return bool(np.all(sub | sub.T))


def window(
    dcpo: SymbolicDcpo, bound: int, max_bound: Optional[int] = None
) -> Window:
    """
    Samples a finite window of the given dcpo, and evaluates the order
    predicate on all pairs of sampled elements.

    Parameters
    ----------
    dcpo
        The symbolic dcpo.
    bound
        Window bound :math:`B \\ge 1`.
    max_bound
        Cap on the bound. Defaults to ``dcpo.max_bound``.

    Returns
    -------
    Window
        The sampled elements and their order relation.

    Raises
    ------
    ValueError
        When ``bound`` is smaller than one.
    BoundExceededError
        When ``bound`` exceeds the cap.
    """
    if max_bound is None:
        max_bound = dcpo.max_bound

    if bound < 1:
        raise ValueError("Window bound < 1 not understood.")

    if bound > max_bound:
        msg = f"Window bound {bound} exceeds cap {max_bound} ({dcpo.name})."
        raise BoundExceededError(msg)

    elements = tuple(dcpo.sampler(bound))
    size = len(elements)
    relation = np.zeros((size, size), dtype=bool)
    for row, first in enumerate(elements):
        for col, second in enumerate(elements):
            relation[row, col] = dcpo.leq(first, second)

    relation.flags.writeable = False
    return Window(elements, relation)


def _top_leq(leq: Callable[[Any, Any], bool], first: Any, second: Any) -> bool:
    if second == TOP:
        return True

    return first != TOP and leq(first, second)


def _top_sampler(sampler: Callable[[int], list[Any]], bound: int) -> list[Any]:
    return [*sampler(bound), TOP]


def with_top(dcpo: SymbolicDcpo) -> SymbolicDcpo:
    """
    Returns :math:`P^*`, the dcpo obtained by adding a top element
    :data:`TOP` to :math:`P`. Windows of :math:`P^*` are the windows of
    :math:`P` with the top element appended.
    """
    return SymbolicDcpo(
        name=f"{dcpo.name}-star",
        family=dcpo.family,
        leq=partial(_top_leq, dcpo.leq),
        sampler=partial(_top_sampler, dcpo.sampler),
        max_bound=dcpo.max_bound,
        base=dcpo,
    )
