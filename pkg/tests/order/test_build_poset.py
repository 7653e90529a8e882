from numpy.testing import assert_, assert_equal, assert_raises

from pyscl.exceptions import CycleError
from pyscl.order import build_poset


def test_transitive_closure():
    """
    Tests that the order is the reflexive-transitive closure of the pairs.
    """
    poset = build_poset(4, [(0, 1), (1, 2), (2, 3)])

    for x in range(4):
        for y in range(4):
            assert_equal(poset.is_leq(x, y), x <= y)


def test_non_cover_pairs_are_allowed():
    """
    Tests that pairs need not be covers: the generated order is the same.
    """
    first = build_poset(3, [(0, 1), (1, 2), (0, 2)])
    second = build_poset(3, [(0, 1), (1, 2)])
    assert_equal(first, second)
    assert_equal(first.covers, ((0, 1), (1, 2)))


def test_raises_invalid_arguments():
    with assert_raises(ValueError):
        build_poset(-1, [])

    with assert_raises(IndexError):
        build_poset(2, [(0, 2)])

    with assert_raises(CycleError):
        build_poset(3, [(0, 1), (1, 2), (2, 0)])


def test_cycle_error_is_value_error():
    with assert_raises(ValueError):
        build_poset(2, [(0, 1), (1, 0)])


def test_empty_and_antichain():
    assert_equal(build_poset(0, []).size, 0)

    antichain = build_poset(3, [])
    assert_(not any(antichain.comparable(0, y) for y in (1, 2)))
