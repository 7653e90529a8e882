from fractions import Fraction
from typing import Optional

import numpy as np

from pyscl.CheckReport import CheckReport
from pyscl.constants import DEFAULT_SEED
from pyscl.witnesses.SymbolicDcpo import TOP, SymbolicDcpo, Window, window
from pyscl.witnesses.johnstone import (
    INFINITY,
    JohnstoneElement,
    johnstone_leq,
)
from pyscl.witnesses.kou import Point, Triple, kou_leq


def check_order_axioms(
    claim_id: str, anchor: str, win: Window, bound: int
) -> CheckReport:
    """
    Checks reflexivity, antisymmetry and transitivity of a window relation.
    Every ordered triple of window elements is one case; transitivity is
    checked with a boolean matrix product.
    """
    size = len(win)
    rel = win.relation
    report = CheckReport(claim_id, anchor, bound, cases=size**3)

    for idx in np.flatnonzero(~np.diag(rel)):
        report.violations.append(f"{win.elements[idx]} is not <= itself.")

    both = rel & rel.T & ~np.eye(size, dtype=bool)
    for row, col in np.argwhere(np.triu(both)):
        first, second = win.elements[row], win.elements[col]
        report.violations.append(f"{first} <= {second} <= {first}.")

    rel_int = rel.astype(np.int64)
    for row, col in np.argwhere(((rel_int @ rel_int) > 0) & ~rel):
        first, second = win.elements[row], win.elements[col]
        msg = f"{first} <= z <= {second} for some z, but not directly."
        report.violations.append(msg)

    return report


def _bounds_chain(m: int, elem: JohnstoneElement) -> bool:
    # Whether elem survives the exact element of the chain {(m, k)} that
    # lies just beyond it.
    beyond = int(elem.n) + 1 if elem.is_finite else elem.m + 1
    return johnstone_leq(JohnstoneElement(m, beyond), elem)


def _johnstone_claims(win: Window, bound: int) -> list[CheckReport]:
    elements = win.elements

    j1 = check_order_axioms("J1", "(X, ≤) is a dcpo", win, bound)

    j2 = CheckReport(
        "J2",
        "↓(m, n) is a down-linear element of Irr_σ(X)",
        bound,
        notes="The condition 'm≠∞' is read as n ≠ ∞: m ranges over ℕ.",
    )
    for idx, elem in enumerate(elements):
        if elem.is_finite:
            j2.cases += 1
            if not win.is_chain(win.down(idx)):
                j2.violations.append(f"↓{elem} is not a chain.")

    j3 = CheckReport(
        "J3",
        "↓(m, ∞) is the supremum of the chain {↓(m, k): k≠∞}",
        bound,
        notes=(
            "The supremum of the chain is the Scott closure of its union. "
            "In the window this is checked as: (m, ∞) is the least upper "
            "bound of {(m, k)} among the window elements not refuted by an "
            "exact (m, k) beyond the window, and ↓(m, ∞) is not a chain "
            "once it meets two first coordinates."
        ),
    )
    for m in range(1, bound + 1):
        j3.cases += 1
        top = win.index(JohnstoneElement(m, INFINITY))
        below = win.down(top)

        firsts = {elements[idx].m for idx in below}
        if len(firsts) > 1 and win.is_chain(below):
            j3.violations.append(f"↓({m}, ∞) is a chain.")
            continue

        chain = [JohnstoneElement(m, k) for k in range(1, bound + 1)]
        rows = [win.index(elem) for elem in chain]
        upper = [
            idx
            for idx in np.flatnonzero(np.all(win.relation[rows], axis=0))
            if _bounds_chain(m, elements[idx])
        ]

        if top not in upper or not np.all(win.relation[top, upper]):
            msg = f"({m}, ∞) is not the least upper bound of {{({m}, k)}}."
            j3.violations.append(msg)

    j4 = CheckReport(
        "J4",
        "X≠cl({x}) for any x∈X",
        bound,
        cases=len(win),
        evidence=True,
    )
    for idx, elem in enumerate(elements):
        if np.all(win.relation[:, idx]):
            j4.violations.append(f"{elem} is above every window element.")

    j5 = CheckReport("J5", "↓(m, ∞) is not a chain", bound, cases=1)
    first, second = JohnstoneElement(1, 1), JohnstoneElement(2, 1)
    peak = JohnstoneElement(3, INFINITY)
    below = johnstone_leq(first, peak) and johnstone_leq(second, peak)
    comparable = johnstone_leq(first, second) or johnstone_leq(second, first)
    if not below or comparable:
        msg = f"{first} and {second}: not incomparable and below {peak}."
        j5.violations.append(msg)

    return [j1, j2, j3, j4, j5]


def _refute(point: Point, upper) -> Optional[Fraction]:
    # Exact k in (0, 1) with (k, x, x) not below the given upper bound.
    if isinstance(upper, Triple):
        k_star = (upper.k + 1) / 2
    elif upper.x < point.x:
        k_star = (upper.x / point.x + 1) / 2
    else:
        return None

    if kou_leq(Triple(k_star, point.x, point.x), upper):
        return None

    return k_star


def _kou_claims(
    win: Window, bound: int, rng: np.random.Generator
) -> list[CheckReport]:
    elements = win.elements

    k1 = check_order_axioms("K1", "⊑ is a partial order on P", win, bound)

    k2 = CheckReport("K2", "↓u={(k, a, b): k≤h} is a chain", bound)
    for idx, elem in enumerate(elements):
        if not isinstance(elem, Triple):
            continue

        k2.cases += 1
        below = win.down(idx)
        expected = {
            other
            for other in elements
            if isinstance(other, Triple)
            and (other.a, other.b) == (elem.a, elem.b)
            and other.k <= elem.k
        }

        if {elements[other] for other in below} != expected:
            k2.violations.append(f"↓{elem} is not {{(k, a, b): k ≤ h}}.")
        elif not win.is_chain(below):
            k2.violations.append(f"↓{elem} is not a chain.")

    k3 = CheckReport(
        "K3",
        "u=⋁{(k, x, x): 0<k<1}",
        bound,
        evidence=True,
        notes=(
            "'If u=x∈P_0' is read as u = x ∈ X. Window upper bounds other "
            "than x are refuted by an exact k outside the window."
        ),
    )

    # Sampled k: those of the window, and seeded random ones beyond it.
    ks = {elem.k for elem in elements if isinstance(elem, Triple)}
    for _ in range(bound):
        den = int(rng.integers(bound + 1, 4 * bound + 1))
        num = int(rng.integers(1, den))
        ks.add(Fraction(num, den))

    ks_sorted = sorted(ks)
    for point in elements:
        if not isinstance(point, Point):
            continue

        k3.cases += 1
        family = [Triple(k, point.x, point.x) for k in ks_sorted]

        problems = [
            f"{triple} is not below {point}"
            for triple in family
            if not kou_leq(triple, point)
        ]

        if not all(map(kou_leq, family, family[1:])):
            problems.append(f"{{(k, {point}, {point})}} is not a chain")

        for upper in elements:
            if upper == point or not all(kou_leq(t, upper) for t in family):
                continue

            if not kou_leq(point, upper) and _refute(point, upper) is None:
                problems.append(f"{upper} bounds the chain, but not {point}")

        if problems:
            k3.violations.append("; ".join(problems) + ".")

    return [k1, k2, k3]


def _star_claims(win: Window, bound: int) -> CheckReport:
    s1 = CheckReport(
        "S1",
        "X is an irreducible Scott closed set of X* which is not the "
        "closure of any point of X*",
        bound,
        cases=len(win),
        evidence=True,
    )

    top = win.index(TOP)
    base = [idx for idx in range(len(win)) if idx != top]

    for idx, elem in enumerate(win.elements):
        if not win.relation[idx, top]:
            s1.violations.append(f"{elem} is not below the added top.")

        if idx != top and np.all(win.relation[base, idx]):
            msg = f"{elem} is above every element of the base window."
            s1.violations.append(msg)

    return s1


def verify_witness_claims(
    dcpo: SymbolicDcpo,
    bound: int,
    seed: int = DEFAULT_SEED,
    max_bound: Optional[int] = None,
) -> list[CheckReport]:
    """
    Runs the bounded checks of the structural claims about the given witness
    on its window of the given bound.

    Johnstone's dcpo gets checks ``J1`` to ``J5`` and Kou's dcpo ``K1`` to
    ``K3``; the star variants get the checks of their base and ``S1``.
    Statements about the infinite dcpo only yield bounded evidence; such
    reports have status ``'evidence'`` when they pass.

    Parameters
    ----------
    dcpo
        The witness.
    bound
        Window bound.
    seed
        Seed for the random rational samples beyond the window.
    max_bound
        Cap on the bound. Defaults to ``dcpo.max_bound``.

    Returns
    -------
    list
        One report per claim.

    Raises
    ------
    BoundExceededError
        When ``bound`` exceeds the cap.
    """
    if dcpo.base is not None:
        base_reports = verify_witness_claims(dcpo.base, bound, seed, max_bound)
        star_window = window(dcpo, bound, max_bound)
        return [*base_reports, _star_claims(star_window, bound)]

    win = window(dcpo, bound, max_bound)
    rng = np.random.default_rng(seed)

    if dcpo.family == "johnstone":
        return _johnstone_claims(win, bound)

    return _kou_claims(win, bound, rng)
