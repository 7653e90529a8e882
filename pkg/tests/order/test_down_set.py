import pytest
from numpy.testing import assert_, assert_equal

from pyscl import ElementSet
from pyscl.order import down_set
from tests.helpers import labelled_posets


def test_diamond(diamond):
    """
    Tests lower and upper sets generated by the two middle elements of the
    diamond.
    """
    middle = ElementSet.from_indices(4, [1, 2])

    assert_equal(list(down_set(diamond, middle)), [0, 1, 2])
    assert_equal(list(down_set(diamond, middle, "up")), [1, 2, 3])


def test_empty_set(diamond):
    empty = ElementSet.empty(4)
    assert_(down_set(diamond, empty).is_empty())
    assert_(down_set(diamond, empty, "up").is_empty())


@pytest.mark.parametrize("direction", ["down", "up"])
def test_closure_operator(direction):
    """
    Tests that both operators are extensive, idempotent and monotone, on
    all labelled posets with three elements and all pairs of subsets.
    """
    for poset in labelled_posets(3):
        subsets = [ElementSet(3, bits) for bits in range(8)]

        for first in subsets:
            closed = down_set(poset, first, direction)
            assert_(first <= closed)
            assert_equal(down_set(poset, closed, direction), closed)

            for second in subsets:
                if first <= second:
                    assert_(closed <= down_set(poset, second, direction))
