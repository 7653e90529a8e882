from functools import lru_cache, partial
from time import perf_counter
from typing import Callable, Iterable, Iterator

from pyscl.FiniteLattice import FiniteLattice
from pyscl.FinitePoset import FinitePoset
from pyscl.ScanReport import ScanReport
from pyscl.constants import MAX_ENUMERATION_SIZE
from pyscl.exceptions import BoundExceededError
from pyscl.lattice.isomorphism import lattice_isomorphic
from pyscl.lattice.join_irreducibles import join_irreducibles
from pyscl.lattice.lattice_of import lattice_of
from pyscl.order.enumerate_posets import poset_universe
from pyscl.order.isomorphism import poset_isomorphism
from pyscl.topology.ClosedFamily import scott_closed_family

Mapper = Callable[[Callable, Iterable], Iterator]
RowResult = tuple[int, int, list[tuple[int, int]], bool]


@lru_cache(maxsize=8)
def scott_lattices(
    bound: int,
) -> tuple[tuple[FinitePoset, ...], tuple[FiniteLattice, ...]]:
    """
    Returns the canonical posets of sizes one to ``bound``, together with
    their Scott closed set lattices :math:`C_\\sigma(P)`.
    """
    universe = tuple(poset_universe(bound, max_size=bound))
    lattices = tuple(
        lattice_of(scott_closed_family(poset)) for poset in universe
    )
    return universe, lattices


def scan_row(bound: int, row: int) -> RowResult:
    """
    Compares class ``row`` against itself and every later class. Also checks
    that the class representative is recovered, up to isomorphism, as the
    join-irreducibles of its lattice.

    Returns
    -------
    tuple
        Pairs checked, lattice-isomorphic pairs, violating pairs, and whether
        the Birkhoff cross-check succeeded.
    """
    universe, lattices = scott_lattices(bound)
    birkhoff = join_irreducibles(lattices[row])
    birkhoff_ok = poset_isomorphism(birkhoff, universe[row]) is not None

    pairs = 0
    iso_pairs = 0
    violations = []

    for col in range(row, len(universe)):
        pairs += 1

        if lattices[row].size != lattices[col].size:
            continue

        if lattice_isomorphic(lattices[row], lattices[col]) is None:
            continue

        iso_pairs += 1
        if poset_isomorphism(universe[row], universe[col]) is None:
            violations.append((row, col))

    return pairs, iso_pairs, violations, birkhoff_ok


def scl_faithful_scan(
    bound: int,
    max_size: int = MAX_ENUMERATION_SIZE,
    mapper: Mapper = map,
) -> ScanReport:
    """
    Scans all unordered pairs :math:`(P, Q)` of canonical posets with one to
    ``bound`` elements for Scott closed set lattice faithfulness: whenever
    :math:`C_\\sigma(P) \\cong C_\\sigma(Q)`, also :math:`P \\cong Q` must
    hold. Pairs of a class with itself are included.

    Each class is furthermore cross-checked against the Birkhoff
    representation: the join-irreducibles of :math:`C_\\sigma(P)` must form a
    poset isomorphic to :math:`P`.

    Parameters
    ----------
    bound
        Maximum poset size.
    max_size
        Maximum enumeration size. Default
        :data:`~pyscl.constants.MAX_ENUMERATION_SIZE`.
    mapper
        Function with the signature of the builtin :func:`map`, used to
        evaluate the rows of the scan. Pass a parallel map to distribute the
        rows over worker processes. The report does not depend on it.

    Returns
    -------
    ScanReport
        The scan outcome, with violations sorted by class index.

    Raises
    ------
    ValueError
        When ``bound`` is negative.
    BoundExceededError
        When ``bound`` exceeds ``max_size``.
    """
    if bound < 0:
        raise ValueError("Negative bound not understood.")

    if bound > max_size:
        msg = f"Cannot scan posets of size {bound} > {max_size}."
        raise BoundExceededError(msg)

    start = perf_counter()
    universe, _ = scott_lattices(bound)
    rows = list(mapper(partial(scan_row, bound), range(len(universe))))

    violations = sorted(pair for _, _, pairs, _ in rows for pair in pairs)
    failures = [idx for idx, row in enumerate(rows) if not row[3]]

    return ScanReport(
        bound=bound,
        classes=len(universe),
        pairs_checked=sum(row[0] for row in rows),
        iso_pairs=sum(row[1] for row in rows),
        violations=violations,
        birkhoff_failures=failures,
        elapsed_ms=1000 * (perf_counter() - start),
    )
