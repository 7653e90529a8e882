from collections import defaultdict
from typing import Optional, Sequence

from pyscl.FinitePoset import FinitePoset


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    poset: FinitePoset,
    labels: Optional[Sequence[object]] = None,
    name: str = "poset",
) -> str:
    """
    Renders the Hasse diagram of the given poset in the DOT language. Edges
    are the cover pairs, drawn bottom to top, and elements of equal height
    share a rank.

    Parameters
    ----------
    poset
        The poset to render.
    labels
        Optional node labels, one per element. Defaults to the element
        indices.
    name
        Name of the graph.

    Returns
    -------
    str
        The DOT source. The empty poset renders as an empty graph.

    Raises
    ------
    ValueError
        When the number of labels does not match the poset's size.
    """
    if labels is not None and len(labels) != poset.size:
        raise ValueError("Number of labels does not match the poset.")

    lines = [f"digraph {_quote(name)} {{", "    rankdir=BT;"]

    layers = defaultdict(list)
    for x in poset:
        layers[poset.heights[x]].append(x)

    for height in sorted(layers):
        nodes = []
        for x in layers[height]:
            label = str(x) if labels is None else str(labels[x])
            nodes.append(f"{x} [label={_quote(label)}];")

        lines.append("    { rank=same; " + " ".join(nodes) + " }")

    lines.extend(f"    {low} -> {high};" for low, high in poset.covers)
    lines.append("}")
    return "\n".join(lines) + "\n"
