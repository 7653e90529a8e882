from collections import defaultdict
from typing import Optional, Sequence

import matplotlib.pyplot as plt
import numpy as np

from pyscl.FinitePoset import FinitePoset


def hasse_layout(poset: FinitePoset) -> np.ndarray:
    """
    Computes node positions for a Hasse diagram: elements are placed on rows
    by height, and spread evenly and centred within each row.

    Returns
    -------
    np.ndarray
        Array of shape ``(size, 2)`` with the ``(x, y)`` position of each
        element.
    """
    layers = defaultdict(list)
    for x in poset:
        layers[poset.heights[x]].append(x)

    coords = np.zeros((poset.size, 2))
    for height, members in layers.items():
        offsets = np.arange(len(members)) - (len(members) - 1) / 2
        coords[members, 0] = offsets
        coords[members, 1] = height

    return coords


def plot_hasse(
    poset: FinitePoset,
    labels: Optional[Sequence[object]] = None,
    title: str = "Hasse diagram",
    ax: Optional[plt.Axes] = None,
):
    """
    Plots the Hasse diagram of a poset: one marker per element, and one line
    segment per cover pair, from the lower to the upper element.

    Parameters
    ----------
    poset
        The poset to plot.
    labels
        Optional labels, one per element. Defaults to the element indices.
    title
        Title to add to the plot.
    ax
        Axes object to draw the plot on. One will be created if not provided.
    """
    if not ax:
        _, ax = plt.subplots()

    coords = hasse_layout(poset)

    for low, high in poset.covers:
        segment = coords[[low, high]]
        ax.plot(segment[:, 0], segment[:, 1], c="grey", lw=1, zorder=1)

    ax.scatter(coords[:, 0], coords[:, 1], s=200, c="tab:blue", zorder=2)

    for x in poset:
        label = str(x) if labels is None else str(labels[x])
        ax.annotate(
            label,
            coords[x],
            xytext=(0, 12),
            textcoords="offset points",
            ha="center",
        )

    ax.set_title(title)
    ax.set_xticks([])
    ax.set_yticks([])
    ax.margins(0.2)
