from .plot_hasse import hasse_layout as hasse_layout
from .plot_hasse import plot_hasse as plot_hasse
