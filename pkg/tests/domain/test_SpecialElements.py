from numpy.testing import assert_equal

from pyscl import ElementSet
from pyscl.domain import (
    SpecialElements,
    down_linear_elements,
    quasicontinuous_elements,
    special_elements,
)
from pyscl.order import poset_universe


def test_special_elements_of_diamond(diamond):
    """
    Tests that the top of the diamond is not down-linear, but that every
    element of the diamond is quasicontinuous.
    """
    down_linear, quasicontinuous = special_elements(diamond)

    assert_equal(list(down_linear), [0, 1, 2])
    assert_equal(list(quasicontinuous), [0, 1, 2, 3])


def test_chain_elements_are_down_linear(chain3):
    """
    Tests that every element of a chain is down-linear.
    """
    assert_equal(down_linear_elements(chain3), ElementSet.full(3))
    assert_equal(quasicontinuous_elements(chain3), ElementSet.full(3))


def test_m3_top_is_not_down_linear(m3):
    """
    Tests that all elements of M3 except its top are down-linear.
    """
    assert_equal(list(down_linear_elements(m3)), [0, 1, 2, 3])


def test_down_linear_must_be_quasicontinuous():
    """
    Tests that a down-linear element that is not quasicontinuous is reported
    as an inconsistency.
    """
    special = SpecialElements(
        ElementSet.full(2), ElementSet.from_indices(2, [0])
    )
    assert_equal(
        special.inconsistencies(),
        ["Down-linear element 1 is not quasicontinuous."],
    )


def test_special_elements_are_consistent():
    """
    Tests that every down-linear element is quasicontinuous, for all posets
    of at most five elements.
    """
    for poset in poset_universe(5):
        assert_equal(special_elements(poset).inconsistencies(), [])
