from typing import Optional

from pyscl.ElementSet import ElementSet
from pyscl.FinitePoset import FinitePoset
from pyscl.constants import MAX_FAMILY_SIZE
from pyscl.domain.SpecialElements import (
    down_linear_elements,
    quasicontinuous_elements,
)
from pyscl.domain.mub import mub_properties
from pyscl.domain.way_below import directed_with_sups
from pyscl.order.directed import directed_subsets
from pyscl.order.subposet import subposet
from pyscl.topology.ClosedFamily import ClosedFamily, scott_closed_family
from pyscl.topology.IrrPoset import irreducible_closed
from pyscl.topology.classify_space import classify_space


def dl_sup_condition(
    poset: FinitePoset,
    proper_only: bool = False,
    family: Optional[ClosedFamily] = None,
    max_members: int = MAX_FAMILY_SIZE,
) -> bool:
    """
    Evaluates the DL-sup condition inside :math:`\\mathrm{Irr}_\\sigma(P)`:
    every nonempty irreducible Scott closed set :math:`F` is a down-linear
    element of :math:`\\mathrm{Irr}_\\sigma(P)`, or the supremum of a
    directed set of down-linear irreducible closed sets.

    The supremum of a directed family of closed sets is the closure of its
    union. The search is exhaustive over all directed families of
    down-linear members.

    Parameters
    ----------
    poset
        The poset :math:`P`.
    proper_only
        When ``True``, only proper subsets :math:`F \\ne P` are checked.
        By default every member of :math:`\\mathrm{Irr}_\\sigma(P)` is
        checked, including :math:`P` itself when it is irreducible.
    family
        The Scott closed sets of ``poset``, if already computed.
    max_members
        Cap passed to :func:`scott_closed_family` when ``family`` is not
        given.

    Returns
    -------
    bool
        Whether the condition holds.
    """
    if family is None:
        family = scott_closed_family(poset, max_members)

    irr = irreducible_closed(poset, family)
    linear = down_linear_elements(irr.order)
    linear_order, linear_idcs = subposet(irr.order, linear)

    sups = set()
    for directed in directed_subsets(linear_order):
        union = ElementSet.empty(poset.size)
        for idx in directed:
            union = union | irr.elements[linear_idcs[idx]]

        sups.add(family.closure(union))

    full = ElementSet.full(poset.size)
    for idx, elems in enumerate(irr.elements):
        if proper_only and elems == full:
            continue

        if idx not in linear and elems not in sups:
            return False

    return True


def _generated_by(poset: FinitePoset, generators: ElementSet) -> bool:
    # Every element is the supremum of a directed subset of the generators.
    sups = {
        sup
        for bits, sup in directed_with_sups(poset)
        if bits & ~generators.bits == 0
    }
    return all(x in sups for x in poset)


def qc_generation_condition(poset: FinitePoset) -> tuple[bool, bool]:
    """
    Evaluates the hypotheses of the quasicontinuous-elements theorem:
    :math:`\\Sigma P` is bounded sober, and every element of :math:`P` is the
    supremum of a directed set of quasicontinuous elements.

    Returns
    -------
    tuple
        The flags ``(bounded_sober, qc_generated)``.
    """
    bounded_sober = classify_space(poset).bounded_sober
    qc_elts = quasicontinuous_elements(poset)
    return bounded_sober, _generated_by(poset, qc_elts)


def dl_generation_condition(poset: FinitePoset) -> tuple[bool, bool]:
    """
    As :func:`qc_generation_condition`, but with down-linear elements as
    generators: :math:`\\Sigma P` is bounded sober, and every element is the
    supremum of a directed set of down-linear elements.

    Returns
    -------
    tuple
        The flags ``(bounded_sober, dl_generated)``.
    """
    bounded_sober = classify_space(poset).bounded_sober
    dl_elts = down_linear_elements(poset)
    return bounded_sober, _generated_by(poset, dl_elts)


def property_m_generation_condition(poset: FinitePoset) -> tuple[bool, bool]:
    """
    Evaluates the hypotheses of the property M theorem: :math:`P` has
    property M, and every element is the supremum of a directed set of
    quasicontinuous elements.

    Returns
    -------
    tuple
        The flags ``(M, qc_generated)``.
    """
    _, has_m = mub_properties(poset)
    qc_elts = quasicontinuous_elements(poset)
    return has_m, _generated_by(poset, qc_elts)
