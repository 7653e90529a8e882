from numpy.testing import assert_, assert_equal, assert_raises

from pyscl import to_dot
from pyscl.lattice import lattice_of
from pyscl.topology import irreducible_closed, scott_closed_family


def test_chain2(chain2):
    """
    Tests the exact DOT output for the two-element chain.
    """
    expected = "\n".join(
        [
            'digraph "poset" {',
            "    rankdir=BT;",
            '    { rank=same; 0 [label="0"]; }',
            '    { rank=same; 1 [label="1"]; }',
            "    0 -> 1;",
            "}",
            "",
        ]
    )
    assert_equal(to_dot(chain2), expected)


def test_empty_poset_is_empty_graph(empty):
    expected = 'digraph "e" {\n    rankdir=BT;\n}\n'
    assert_equal(to_dot(empty, name="e"), expected)


def test_closed_set_lattice_of_diamond(diamond):
    """
    Tests that the lattice of Scott closed sets of the diamond renders as
    a six-node graph with set labels.
    """
    family = scott_closed_family(diamond)
    dot = to_dot(lattice_of(family).order, list(family))

    assert_equal(dot.count("[label="), 6)
    assert_('label="{0, 1, 2, 3}"' in dot)
    assert_('label="{}"' in dot)


def test_irr_of_chain2_is_chain(chain2):
    """
    Tests that the irreducible closed sets of a two-element chain render as
    a two-node chain.
    """
    irr = irreducible_closed(chain2)
    dot = to_dot(irr.order, list(irr.elements))

    assert_equal(dot.count("[label="), 2)
    assert_equal(dot.count("->"), 1)


def test_quotes_are_escaped(chain2):
    dot = to_dot(chain2, ['a"b', "c"], name="x")
    assert_('label="a\\"b"' in dot)


def test_raises_label_mismatch(chain2):
    with assert_raises(ValueError):
        to_dot(chain2, ["only one"])
