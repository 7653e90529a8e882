from numpy.testing import assert_, assert_equal, assert_raises

from pyscl import ElementSet
from pyscl.exceptions import BoundExceededError
from pyscl.order import build_poset
from pyscl.topology import scott_closed_family, scott_closure
from tests.helpers import labelled_posets


def test_antichain2(antichain2):
    """
    Tests that all four subsets of a two-element antichain are closed.
    """
    family = scott_closed_family(antichain2)
    assert_equal([list(member) for member in family], [[], [0], [1], [0, 1]])


def test_chain2(chain2):
    family = scott_closed_family(chain2)
    assert_equal([list(member) for member in family], [[], [0], [0, 1]])


def test_empty_poset(empty):
    """
    Tests that the empty poset has exactly one closed set, the empty set.
    """
    family = scott_closed_family(empty)
    assert_equal(len(family), 1)
    assert_(ElementSet.empty(0) in family)


def test_members_are_sorted_and_closed_under_union_and_intersection(
    diamond,
):
    family = scott_closed_family(diamond)
    keys = [member.sort_key() for member in family]
    assert_equal(keys, sorted(keys))

    for first in family:
        for second in family:
            assert_(first | second in family)
            assert_(first & second in family)


def test_closure_is_down_set():
    """
    Tests that the closure computed as an intersection of closed supersets
    equals the lower set, for every subset of every labelled poset on three
    elements.
    """
    for poset in labelled_posets(3):
        family = scott_closed_family(poset)

        for bits in range(8):
            elems = ElementSet(3, bits)
            assert_equal(family.closure(elems), scott_closure(poset, elems))


def test_opens_and_index(chain3):
    """
    Tests that the open sets are the complements of the closed sets, and
    that non-closed sets are rejected by ``index``.
    """
    family = scott_closed_family(chain3)

    opens = [list(opn) for opn in family.opens()]
    assert_equal(opens, [[0, 1, 2], [1, 2], [2], []])
    assert_equal(family.index(ElementSet.from_indices(3, [0, 1])), 2)

    with assert_raises(ValueError):
        family.index(ElementSet.from_indices(3, [1]))


def test_raises_above_cap():
    """
    Tests that families larger than the cap are refused: a five-element
    antichain has 32 closed sets.
    """
    antichain = build_poset(5, [])
    assert_equal(len(scott_closed_family(antichain, max_members=32)), 32)

    with assert_raises(BoundExceededError):
        scott_closed_family(antichain, max_members=31)
