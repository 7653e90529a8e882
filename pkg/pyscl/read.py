import pathlib
import re
from typing import Union
from warnings import warn

from pyscl.FinitePoset import FinitePoset
from pyscl.exceptions import (
    CycleError,
    PosetParseError,
    RedundantCoverWarning,
)
from pyscl.order.build_poset import build_poset

_SIZE_LINE = re.compile(r"^n\s+(\d+)$")
_PAIR_LINE = re.compile(r"^(\d+)\s*<\s*(\d+)$")


def parse(text: str) -> FinitePoset:
    """
    Parses the contents of a ``.poset`` file. See :func:`read` for the
    format.

    Raises
    ------
    PosetParseError
        When the text is not a valid poset description.
    """
    size = None
    pairs: list[tuple[int, int]] = []
    pair_lines: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if (match := _SIZE_LINE.match(line)) is not None:
            if size is not None:
                raise PosetParseError("Duplicate size line.", lineno)

            size = int(match.group(1))
            continue

        if (match := _PAIR_LINE.match(line)) is not None:
            if size is None:
                raise PosetParseError("Pair before size line.", lineno)

            first, second = int(match.group(1)), int(match.group(2))
            if first >= size or second >= size:
                msg = f"Pair ({first}, {second}) outside of {size} elements."
                raise PosetParseError(msg, lineno)

            if first == second:
                raise PosetParseError(f"Pair ({first}, {first}).", lineno)

            pairs.append((first, second))
            pair_lines.append(lineno)
            continue

        raise PosetParseError(f"Cannot parse '{line}'.", lineno)

    if size is None:
        raise PosetParseError("Missing size line.")

    try:
        poset = build_poset(size, pairs)
    except CycleError as exc:
        raise PosetParseError(f"Pairs contain a cycle: {exc}") from exc

    covers = set(poset.covers)
    for pair, lineno in zip(pairs, pair_lines):
        if pair not in covers:
            msg = f"line {lineno}: pair {pair} is implied by the other pairs."
            warn(msg, RedundantCoverWarning, stacklevel=2)

    return poset


def read(where: Union[str, pathlib.Path]) -> FinitePoset:
    """
    Reads the ``.poset`` file at the given location. The format is line
    based:

    * ``n <size>`` gives the number of elements, and must come first;
    * ``<i> < <j>`` states that element ``i`` is below element ``j``;
    * everything after a ``#`` is a comment, and blank lines are ignored.

    The order is the reflexive-transitive closure of the listed pairs.

    Parameters
    ----------
    where
        File location to read.

    Returns
    -------
    FinitePoset
        The poset described by the file.

    Raises
    ------
    PosetParseError
        When the file is malformed. The error carries the offending line
        number where there is one.
    """
    with open(where) as fh:
        return parse(fh.read())


def dumps(poset: FinitePoset) -> str:
    """
    Returns the ``.poset`` text of the given poset: its size line, followed
    by one line per cover pair in lexicographic order.
    """
    lines = [f"n {poset.size}"]
    lines.extend(f"{first} < {second}" for first, second in poset.covers)
    return "\n".join(lines) + "\n"


def write(where: Union[str, pathlib.Path], poset: FinitePoset):
    """
    Writes the given poset to the given location, in ``.poset`` format. Only
    cover pairs are written, so reading the file back returns an equal poset.
    """
    with open(where, "w") as fh:
        fh.write(dumps(poset))
