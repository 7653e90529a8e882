from itertools import combinations
from typing import Optional

import numpy as np

from pyscl.CheckReport import CheckReport
from pyscl.witnesses.SymbolicDcpo import SymbolicDcpo, Window, window


def _window_mub(win: Window, idcs: tuple[int, ...]) -> tuple[set, bool]:
    # Minimal upper bounds of the given elements in the window, and whether
    # every window upper bound lies above one of them.
    upper = np.flatnonzero(np.all(win.relation[list(idcs)], axis=0))
    minimal = [
        idx
        for idx in upper
        if not any(win.relation[other, idx] for other in upper if other != idx)
    ]

    complete = all(
        any(win.relation[low, idx] for low in minimal) for idx in upper
    )
    return {win.elements[idx] for idx in minimal}, complete


def property_m_evidence(
    dcpo: SymbolicDcpo, bound: int, max_bound: Optional[int] = None
) -> CheckReport:
    """
    Searches a bounded window for two-element sets :math:`A` whose minimal
    upper bounds suggest that property M fails: either the window's
    :math:`\\mathrm{mub}(A)` is incomplete, or it grows when the window grows
    from bound :math:`B` to :math:`B + 1`. A growing set of minimal upper
    bounds is finite evidence that :math:`\\mathrm{mub}(A)` is infinite.

    The outcome is bounded evidence only, so the report never fails: the
    findings are summarised in its notes.

    Parameters
    ----------
    dcpo
        The witness.
    bound
        Window bound :math:`B`. The window of bound :math:`B + 1` is also
        sampled.
    max_bound
        Cap on the bound. Defaults to ``dcpo.max_bound``.

    Returns
    -------
    CheckReport
        Report with status ``'evidence'``, one case per pair.
    """
    if max_bound is None:
        max_bound = dcpo.max_bound

    small = window(dcpo, bound, max_bound)
    large = window(dcpo, bound + 1, max_bound + 1)

    growing = []
    incomplete = []
    pairs = list(combinations(range(len(small)), 2))

    for first, second in pairs:
        elems = small.elements[first], small.elements[second]
        small_mub, complete = _window_mub(small, (first, second))
        large_idcs = tuple(large.index(elem) for elem in elems)
        large_mub, _ = _window_mub(large, large_idcs)

        if not complete:
            incomplete.append(elems)

        if len(large_mub) > len(small_mub) > 1:
            growing.append(elems)

    notes = (
        f"{len(growing)} pairs with a growing set of several minimal upper "
        f"bounds, {len(incomplete)} pairs with an incomplete window mub."
    )

    if growing:
        notes += f" Example: A = {{{growing[0][0]}, {growing[0][1]}}}."

    return CheckReport(
        "property-M",
        "do not have property M",
        bound,
        cases=len(pairs),
        evidence=True,
        notes=notes,
    )
