import pytest
from numpy.testing import assert_, assert_equal, assert_raises

from pyscl.exceptions import BoundExceededError
from pyscl.order import (
    canonical_form,
    enumerate_posets,
    lower_set_masks,
    poset_isomorphism,
    poset_universe,
)
from tests.helpers import num_classes


@pytest.mark.parametrize(
    ("size", "count"), [(0, 1), (1, 1), (2, 2), (3, 5), (4, 16), (5, 63)]
)
def test_class_counts(size: int, count: int):
    """
    Tests the number of isomorphism classes of posets of small sizes.
    """
    assert_equal(len(enumerate_posets(size)), count)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_counts_agree_with_labelled_oracle(size: int):
    """
    Tests the enumeration against the brute-force enumeration of labelled
    posets, taken up to isomorphism.
    """
    assert_equal(len(enumerate_posets(size)), num_classes(size))


def test_representatives_are_canonical_and_distinct():
    """
    Tests that each representative is in canonical form, and that no two
    representatives are isomorphic.
    """
    posets = enumerate_posets(4)

    for poset in posets:
        canonical, _ = canonical_form(poset)
        assert_equal(canonical, poset)

    for idx, first in enumerate(posets):
        for second in posets[idx + 1 :]:
            assert_equal(poset_isomorphism(first, second), None)


def test_deterministic_order():
    assert_equal(enumerate_posets(4), enumerate_posets(4))


def test_universe():
    """
    Tests the universe sizes: all classes of one up to the bound elements.
    """
    assert_equal(len(poset_universe(3)), 8)
    assert_equal(len(poset_universe(4)), 24)
    assert_equal(len(poset_universe(5)), 87)
    assert_(all(1 <= poset.size <= 3 for poset in poset_universe(3)))


def test_raises_above_cap():
    with assert_raises(BoundExceededError):
        enumerate_posets(4, max_size=3)

    with assert_raises(BoundExceededError):
        poset_universe(3, max_size=2)


@pytest.mark.parametrize(
    ("fixture", "count"),
    [("chain3", 4), ("antichain2", 4), ("diamond", 6), ("empty", 1)],
)
def test_lower_set_counts(fixture: str, count: int, request):
    """
    Tests the number of lower sets, and that each mask is a lower set.
    """
    poset = request.getfixturevalue(fixture)
    masks = lower_set_masks(poset)

    assert_equal(len(masks), count)
    assert_equal(len(set(masks)), count)

    for mask in masks:
        for x in poset:
            if mask >> x & 1:
                assert_equal(poset.down_masks[x] & ~mask, 0)


def test_lower_sets_raises_above_cap(diamond):
    with assert_raises(BoundExceededError):
        lower_set_masks(diamond, max_count=5)
