import pytest
from numpy.testing import assert_, assert_equal

from pyscl import ElementSet
from pyscl.domain import (
    DomainClass,
    domain_class,
    is_quasicontinuous,
    mub,
    mub_properties,
    way_below,
)
from pyscl.order import poset_universe


@pytest.mark.parametrize(
    "fixture", ["chain2", "antichain2", "chain3", "diamond", "m3", "empty"]
)
def test_finite_posets_are_continuous(fixture: str, request):
    """
    Tests that finite posets are continuous, and hence quasicontinuous.
    """
    poset = request.getfixturevalue(fixture)
    assert_equal(domain_class(poset), DomainClass(True, True))


def test_all_small_posets_are_continuous():
    """
    Tests the definitional continuity checks on every poset of at most five
    elements.
    """
    for poset in poset_universe(5):
        kind = domain_class(poset)
        assert_equal(kind, DomainClass(True, True))
        assert_equal(kind.inconsistencies(), [])


def test_quasicontinuity_separates_from_above(chain2):
    """
    Tests quasicontinuity on the two-element chain. The top is separated
    from the bottom by ``{1}``, which is way below the top. The bottom lies
    below the top, so it needs no separating set.
    """
    assert_(is_quasicontinuous(chain2))
    assert_(not way_below(chain2, ElementSet.from_indices(2, [1]), 0))


def test_domain_class_inconsistencies():
    """
    Tests that a continuous but not quasicontinuous dcpo is reported as an
    inconsistency, and that the other flag combinations are consistent.
    """
    flags = DomainClass(continuous=True, quasicontinuous=False)
    assert_equal(len(flags.inconsistencies()), 1)

    flags = DomainClass(continuous=False, quasicontinuous=True)
    expected = {"continuous": False, "quasicontinuous": True}
    assert_equal(flags.to_dict(), expected)
    assert_equal(flags.inconsistencies(), [])
    assert_equal(DomainClass(False, False).inconsistencies(), [])


def test_mub(diamond, antichain2):
    """
    Tests minimal upper bounds in the diamond and the two-element antichain.
    """
    atoms = ElementSet.from_indices(4, [1, 2])
    assert_equal(list(mub(diamond, atoms)), [3])
    assert_equal(list(mub(diamond, ElementSet.empty(4))), [0])

    both = ElementSet.full(2)
    assert_(mub(antichain2, both).is_empty())
    assert_equal(list(mub(antichain2, ElementSet.empty(2))), [0, 1])


def test_mub_of_m3(m3):
    """
    Tests that any two atoms of M3 have the top as their only minimal upper
    bound.
    """
    assert_equal(list(mub(m3, ElementSet.from_indices(5, [1, 3]))), [4])


def test_finite_posets_have_property_m():
    """
    Tests that every finite poset has properties m and M: minimal upper
    bounds are complete, and trivially finite. Checks all posets of at most
    five elements.
    """
    for poset in poset_universe(5):
        assert_equal(mub_properties(poset), (True, True))
