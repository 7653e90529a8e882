from typing import Optional

from pyscl.CheckReport import CheckReport
from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.order.bounds import least_upper_bound
from pyscl.order.directed import directed_subsets, directed_sup
from pyscl.topology.ClosedFamily import ClosedFamily, scott_closed_family
from pyscl.topology.IrrPoset import irreducible_closed

ANCHOR = "equals cl({x}), where x=⋁{x_i: i∈I}"


def directed_point_sup_check(
    poset: FinitePoset,
    family: Optional[ClosedFamily] = None,
    max_members: int = MAX_FAMILY_SIZE,
) -> CheckReport:
    """
    Checks, for every nonempty directed :math:`D \\subseteq P`, that the
    supremum in :math:`\\mathrm{Irr}(\\Sigma P)` of the point closures
    :math:`\\{cl(\\{d\\}): d \\in D\\}` is :math:`cl(\\{\\bigvee D\\})`.

    The supremum is computed as the least upper bound in the inclusion order
    of the irreducible closed sets, not as a closure of the union.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    family
        Its Scott closed sets, if already computed.
    max_members
        Cap passed to :func:`scott_closed_family` when ``family`` is not
        given.

    Returns
    -------
    CheckReport
        One case per directed subset.
    """
    if family is None:
        family = scott_closed_family(poset, max_members)

    irr = irreducible_closed(poset, family)
    report = CheckReport("directed-point-sup", ANCHOR, poset.size)

    for directed in directed_subsets(poset):
        report.cases += 1

        points = [
            irr.index(family.closure(ElementSet.from_indices(poset.size, [x])))
            for x in directed
        ]

        if None in points:
            msg = f"D = {directed}: a point closure is not irreducible."
            report.violations.append(msg)
            continue

        closures = ElementSet.from_indices(len(irr), points)  # type: ignore
        sup = least_upper_bound(irr.order, closures)
        largest = directed_sup(poset, directed)
        top = ElementSet.from_indices(poset.size, [largest])
        expected = family.closure(top)

        if sup is None or irr.elements[sup] != expected:
            found = "none" if sup is None else irr.elements[sup]
            msg = f"D = {directed}: sup is {found}, expected {expected}."
            report.violations.append(msg)

    return report
