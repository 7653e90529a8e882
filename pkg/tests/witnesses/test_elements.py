from fractions import Fraction

import pytest
from numpy.testing import assert_, assert_equal, assert_raises

from pyscl.witnesses import (
    INFINITY,
    JohnstoneElement,
    Point,
    Triple,
    johnstone_leq,
    kou_leq,
)
from pyscl.witnesses.kou import rationals

F = Fraction


@pytest.mark.parametrize(
    ("m", "n"), [(0, 1), (1, 0), (1, 1.5), (True, 1), (1, True), (-1, 2)]
)
def test_johnstone_element_raises_invalid(m, n):
    """
    Tests that coordinates outside the positive integers (or infinity for
    the second coordinate) are refused.
    """
    with assert_raises(ValueError):
        JohnstoneElement(m, n)


def test_johnstone_element_repr():
    """
    Tests that the infinite second coordinate is printed as such.
    """
    assert_equal(repr(JohnstoneElement(2, 3)), "(2, 3)")
    assert_equal(repr(JohnstoneElement(2, INFINITY)), "(2, ∞)")
    assert_(not JohnstoneElement(2, INFINITY).is_finite)


@pytest.mark.parametrize(
    ("first", "second", "expected"),
    [
        ((1, 1), (1, 2), True),
        ((1, 2), (1, 1), False),
        ((1, 1), (1, INFINITY), True),
        ((2, 1), (3, INFINITY), True),
        ((3, 5), (2, INFINITY), False),
        ((1, INFINITY), (2, INFINITY), False),
        ((1, 1), (2, 1), False),
    ],
)
def test_johnstone_leq(first, second, expected: bool):
    """
    Tests Johnstone's order on a few pairs of elements.
    """
    first = JohnstoneElement(*first)
    second = JohnstoneElement(*second)
    assert_equal(johnstone_leq(first, second), expected)


@pytest.mark.parametrize(
    "args",
    [
        (F(1), F(1), F(1)),
        (F(0), F(1), F(1)),
        (F(1, 2), F(1, 2), F(1)),
        (F(1, 2), F(1), F(0)),
        (0.5, F(1), F(1)),
    ],
)
def test_triple_raises_invalid(args):
    """
    Tests that triples need 0 < k < 1 and 0 < b <= a <= 1, as exact
    rationals.
    """
    with assert_raises(ValueError):
        Triple(*args)


@pytest.mark.parametrize("x", [F(0), F(3, 2), 0.5])
def test_point_raises_invalid(x):
    """
    Tests that points must be exact rationals in (0, 1].
    """
    with assert_raises(ValueError):
        Point(x)


def test_kou_leq():
    """
    Tests Kou's order between triples and points, and among triples.
    """
    triple = Triple(F(1, 2), F(1), F(1, 2))

    assert_(kou_leq(triple, Point(F(1))))
    assert_(kou_leq(triple, Point(F(1, 4))))
    assert_(kou_leq(triple, Point(F(1, 3))))
    assert_(not kou_leq(triple, Point(F(1, 2))))
    assert_(not kou_leq(triple, Point(F(1, 8))))

    assert_(kou_leq(triple, Triple(F(3, 4), F(1), F(1, 2))))
    assert_(not kou_leq(triple, Triple(F(1, 4), F(1), F(1, 2))))
    assert_(not kou_leq(triple, Triple(F(3, 4), F(1), F(1))))

    assert_(not kou_leq(Point(F(1)), triple))
    assert_(not kou_leq(Point(F(1)), Point(F(1, 2))))
    assert_(kou_leq(Point(F(1)), Point(F(1))))


def test_rationals():
    """
    Tests the rationals in (0, 1] with denominators up to three.
    """
    expected = [F(1, 3), F(1, 2), F(2, 3), F(1)]
    assert_equal(rationals(3), expected)
