import pytest

from pyscl.order import build_poset
from tests.helpers import read


@pytest.fixture(scope="session")
def chain2():
    """
    Fixture that returns the two-element chain :math:`0 < 1`.
    """
    return read("data/chain2.poset")


@pytest.fixture(scope="session")
def antichain2():
    """
    Fixture that returns the two-element antichain.
    """
    return read("data/antichain2.poset")


@pytest.fixture(scope="session")
def chain3():
    """
    Fixture that returns the three-element chain :math:`0 < 1 < 2`.
    """
    return read("data/chain3.poset")


@pytest.fixture(scope="session")
def diamond():
    """
    Fixture that returns the diamond: a bottom 0, two incomparable elements
    1 and 2, and a top 3.
    """
    return read("data/diamond.poset")


@pytest.fixture(scope="session")
def empty():
    """
    Fixture that returns the empty poset.
    """
    return read("data/empty.poset")


@pytest.fixture(scope="session")
def m3():
    """
    Fixture that returns the order of the lattice :math:`M_3`: a bottom 0,
    three pairwise incomparable atoms 1, 2, 3, and a top 4. This lattice is
    not distributive.
    """
    return build_poset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
