from numpy.testing import assert_, assert_equal

from pyscl import ElementSet
from pyscl.order import poset_isomorphism, poset_universe
from pyscl.topology import (
    irreducible_closed,
    is_irreducible,
    scott_closed_family,
)


def test_diamond(diamond):
    """
    Tests that the irreducible closed sets of the diamond are its four
    principal lower sets, and that the union of the two middle ones is not
    irreducible.
    """
    irr = irreducible_closed(diamond)
    expected = {diamond.principal_down(x) for x in diamond}

    assert_equal(set(irr.elements), expected)
    assert_equal(len(irr), 4)

    family = scott_closed_family(diamond)
    middle = ElementSet.from_indices(4, [0, 1, 2])
    assert_(not is_irreducible(family, middle))
    assert_equal(irr.index(middle), None)


def test_antichain_has_no_irreducible_carrier(antichain2):
    irr = irreducible_closed(antichain2)
    assert_equal([list(elems) for elems in irr.elements], [[0], [1]])


def test_empty_poset(empty):
    assert_equal(len(irreducible_closed(empty)), 0)


def test_irr_is_isomorphic_to_poset():
    """
    Tests that the irreducible closed sets, ordered by inclusion, form a
    poset isomorphic to the original, for all posets up to five elements.
    Each principal lower set maps to its generating element.
    """
    for poset in poset_universe(5):
        irr = irreducible_closed(poset)
        assert_equal(len(irr), poset.size)
        assert_(poset_isomorphism(poset, irr.order) is not None)

        for x in poset:
            assert_(irr.index(poset.principal_down(x)) is not None)
