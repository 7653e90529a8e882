from typing import Any, Literal, Optional

from pyscl.CheckReport import CheckReport
from pyscl.FinitePoset import FinitePoset
from pyscl.RunConfig import Caps
from pyscl.domain import (
    dl_generation_condition,
    dl_sup_condition,
    domain_class,
    mub_properties,
    property_m_generation_condition,
    qc_generation_condition,
    special_elements,
)
from pyscl.lattice import c_compact_elements, is_vee_irreducible, lattice_of
from pyscl.topology import (
    ClosedFamily,
    classify_space,
    directed_point_sup_check,
    is_irreducible,
    scott_closed_family,
)

Suite = Literal["all", "space", "domain", "kappa"]
SUITES = ("all", "space", "domain", "kappa")

Facts = dict[str, Any]


def _space_suite(
    poset: FinitePoset, family: ClosedFamily
) -> tuple[Facts, list[CheckReport]]:
    flags = classify_space(poset, family)
    anchor = "every nonempty irreducible closed set is the closure of a point"
    report = CheckReport("space-flags", anchor, poset.size, cases=7)
    report.violations.extend(
        f"{name} is false." for name, val in flags.to_dict().items() if not val
    )
    report.violations.extend(flags.inconsistencies())

    reports = [report, directed_point_sup_check(poset, family)]
    return flags.to_dict(), reports


def _domain_suite(
    poset: FinitePoset, family: ClosedFamily
) -> tuple[Facts, list[CheckReport]]:
    facts: Facts = {}
    reports = []

    kind = domain_class(poset)
    facts.update(kind.to_dict())
    anchor = "Every continuous dcpo is quasicontinuous."
    report = CheckReport("domain-class", anchor, poset.size, cases=2)
    if not kind.continuous:  # finite posets are algebraic
        report.violations.append("Finite poset is not continuous.")
    report.violations.extend(kind.inconsistencies())
    reports.append(report)

    has_m, has_big_m = mub_properties(poset)
    facts.update(property_m=has_m, property_M=has_big_m)
    anchor = "The set mub(A) of the minimal upper bounds of A is complete"
    report = CheckReport("property-m", anchor, poset.size, cases=2)
    if not has_m:
        report.violations.append("Property m fails.")
    if not has_big_m:
        report.violations.append("Property M fails.")
    reports.append(report)

    special = special_elements(poset)
    facts["down_linear"] = list(special.down_linear)
    facts["quasicontinuous_elements"] = list(special.quasicontinuous)
    anchor = "every down-linear element is quasicontinuous"
    report = CheckReport(
        "down-linear", anchor, poset.size, cases=len(special.down_linear)
    )
    report.violations.extend(special.inconsistencies())
    reports.append(report)

    facts["dl_sup"] = dl_sup_condition(poset, family=family)
    facts["dl_sup_proper"] = dl_sup_condition(
        poset, proper_only=True, family=family
    )

    bounded_sober, qc_generated = qc_generation_condition(poset)
    facts["qc_generated"] = qc_generated
    anchor = (
        "(1) ΣP is bounded sober; (2) every element of P is the supremum of "
        "a directed set of quasicontinuous elements"
    )
    report = CheckReport("qc-generation", anchor, poset.size, cases=2)
    if not bounded_sober:
        report.violations.append("ΣP is not bounded sober.")
    if not qc_generated:
        report.violations.append("P is not generated by qc elements.")
    reports.append(report)

    _, facts["dl_generated"] = dl_generation_condition(poset)
    facts["property_M_generation"] = all(
        property_m_generation_condition(poset)
    )

    return facts, reports


def _kappa_suite(
    poset: FinitePoset, family: ClosedFamily, caps: Caps
) -> tuple[Facts, list[CheckReport]]:
    lattice = lattice_of(family)
    labels = lattice.labels
    assert labels is not None

    kappa = c_compact_elements(lattice, max_size=caps.beneath_size)
    nonbottom = [idx for idx in kappa if idx != lattice.bottom]

    facts: Facts = {
        "kappa": [list(labels[idx]) for idx in kappa],
        "kappa_without_bottom": [list(labels[idx]) for idx in nonbottom],
    }

    anchor = "A∈κ(C_σ(P)) iff A=↓x"
    principal = CheckReport(
        "kappa-principal", anchor, poset.size, cases=lattice.size
    )
    expected = {poset.principal_down(x) for x in poset}
    found = {labels[idx] for idx in nonbottom}
    for idx in lattice:
        if labels[idx].is_empty():
            continue

        if (labels[idx] in found) != (labels[idx] in expected):
            msg = f"{labels[idx]}: C-compact is {labels[idx] in found}."
            principal.violations.append(msg)

    anchor = "C-compact closet sets are all irreducible"
    report = CheckReport(
        "kappa-irreducible", anchor, poset.size, cases=len(nonbottom)
    )
    report.violations.extend(
        f"{labels[idx]} is not irreducible."
        for idx in nonbottom
        if not is_irreducible(family, labels[idx])
    )
    irreducible = report

    anchor = "Thus a is ∨-irreducible"
    report = CheckReport(
        "kappa-vee-irreducible", anchor, poset.size, cases=len(kappa)
    )
    report.violations.extend(
        f"{labels[idx]} is not ∨-irreducible."
        for idx in kappa
        if not is_vee_irreducible(lattice, idx)
    )

    return facts, [principal, irreducible, report]


def check_poset(
    poset: FinitePoset, which: Suite = "all", caps: Optional[Caps] = None
) -> tuple[Facts, list[CheckReport]]:
    """
    Runs the check suites on a single finite poset.

    The ``'space'`` suite classifies the Scott space :math:`\\Sigma P` and
    checks suprema of directed point closures. The ``'domain'`` suite
    decides continuity, quasicontinuity, properties m and M, the DL-sup
    condition (in both readings) and the generation conditions. The
    ``'kappa'`` suite compares the C-compact elements of
    :math:`C_\\sigma(P)` against the principal lower sets.

    Parameters
    ----------
    poset
        The poset to check.
    which
        The suite to run, or ``'all'``.
    caps
        Size caps. Defaults to the default caps.

    Returns
    -------
    tuple
        A dictionary of computed facts, and the claim reports. Finite posets
        are expected to pass every claim.

    Raises
    ------
    ValueError
        When ``which`` is not a known suite.
    BoundExceededError
        When the closed family or lattice exceeds its cap.
    """
    if which not in SUITES:
        raise ValueError(f"Suite {which!r} not understood.")

    caps = Caps() if caps is None else caps
    family = scott_closed_family(poset, caps.family_size)

    facts: Facts = {"size": poset.size, "closed_sets": len(family)}
    reports: list[CheckReport] = []

    if which in ("all", "space"):
        space_facts, space_reports = _space_suite(poset, family)
        facts.update(space_facts)
        reports.extend(space_reports)

    if which in ("all", "domain"):
        domain_facts, domain_reports = _domain_suite(poset, family)
        facts.update(domain_facts)
        reports.extend(domain_reports)

    if which in ("all", "kappa"):
        kappa_facts, kappa_reports = _kappa_suite(poset, family, caps)
        facts.update(kappa_facts)
        reports.extend(kappa_reports)

    return facts, reports
