from numpy.testing import assert_, assert_equal

from pyscl import ElementSet
from pyscl.order import add_top, is_chain, subposet


def test_subposet_keeps_induced_order(diamond):
    """
    Tests that the induced sub-poset on the top and the middle elements is
    a two-atom "vee" below a top, and that indices map back correctly.
    """
    elems = ElementSet.from_indices(4, [1, 2, 3])
    sub, idcs = subposet(diamond, elems)

    assert_equal(idcs, [1, 2, 3])
    assert_equal(sub.covers, ((0, 2), (1, 2)))


def test_subposet_of_empty_set(diamond):
    sub, idcs = subposet(diamond, ElementSet.empty(4))
    assert_equal(sub.size, 0)
    assert_equal(idcs, [])


def test_add_top(antichain2):
    """
    Tests that the added element is above every old element, and that the
    old order is unchanged.
    """
    starred = add_top(antichain2)

    assert_equal(starred.size, 3)
    assert_(all(starred.is_leq(x, 2) for x in range(3)))
    assert_(not starred.is_leq(2, 0))
    assert_(not starred.comparable(0, 1))


def test_add_top_to_empty_poset(empty):
    assert_equal(add_top(empty).size, 1)


def test_is_chain(diamond, chain3):
    """
    Tests chains in the diamond: any set of comparable elements, including
    the empty set, but not the two middle elements.
    """
    assert_(is_chain(diamond, ElementSet.empty(4)))
    assert_(is_chain(diamond, ElementSet.from_indices(4, [0, 1, 3])))
    assert_(not is_chain(diamond, ElementSet.from_indices(4, [1, 2])))
    assert_(is_chain(chain3, ElementSet.full(3)))
