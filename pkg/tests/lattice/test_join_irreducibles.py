from numpy.testing import assert_, assert_equal, assert_raises

from pyscl import FiniteLattice
from pyscl.lattice import (
    is_vee_irreducible,
    join_irreducible_elements,
    join_irreducibles,
    lattice_of,
)
from pyscl.order import poset_isomorphism, poset_universe
from pyscl.topology import scott_closed_family


def test_join_irreducibles_of_diamond_lattice(diamond):
    """
    Tests that the join-irreducible closed sets of the diamond are its
    principal lower sets.
    """
    family = scott_closed_family(diamond)
    lattice = lattice_of(family)
    elems = join_irreducible_elements(lattice)

    found = {family.members[idx] for idx in elems}
    assert_equal(found, {diamond.principal_down(x) for x in diamond})


def test_birkhoff_round_trip():
    """
    Tests that the join-irreducibles of the Scott closed set lattice form a
    poset isomorphic to the original, for all posets up to five elements.
    """
    for poset in poset_universe(5):
        lattice = lattice_of(scott_closed_family(poset))
        iso = poset_isomorphism(join_irreducibles(lattice), poset)
        assert_(iso is not None)


def test_vee_irreducible_in_m3(m3):
    """
    Tests that the atoms of :math:`M_3` are not vee-irreducible, since each
    lies below the join of the other two, while the bottom is.
    """
    lattice = FiniteLattice.from_order(m3)

    assert_(is_vee_irreducible(lattice, 0))
    assert_(not is_vee_irreducible(lattice, 1))
    assert_(not is_vee_irreducible(lattice, 4))


def test_vee_irreducible_in_chain(chain3):
    lattice = FiniteLattice.from_order(chain3)
    assert_(all(is_vee_irreducible(lattice, x) for x in lattice))


def test_vee_irreducible_raises_out_of_range(chain3):
    lattice = FiniteLattice.from_order(chain3)

    with assert_raises(IndexError):
        is_vee_irreducible(lattice, 3)
