import argparse
import json
import sys
from functools import partial
from pathlib import Path
from time import perf_counter
from typing import Callable, Iterable, Optional, Sequence

try:
    from tqdm import tqdm
    from tqdm.contrib.concurrent import process_map
except ModuleNotFoundError as exc:
    msg = "Install 'tqdm' to use the command line program."
    raise ModuleNotFoundError(msg) from exc

from pyscl.CheckReport import CheckReport
from pyscl.ProgressPrinter import ProgressPrinter
from pyscl.RunConfig import RunConfig
from pyscl.check_poset import SUITES, check_poset
from pyscl.constants import PROPERTY_M_BOUND
from pyscl.domain import scl_faithful_scan
from pyscl.domain.scl_faithful_scan import Mapper
from pyscl.dot import to_dot
from pyscl.exceptions import BoundExceededError, PosetParseError
from pyscl.lattice import lattice_of
from pyscl.order import enumerate_posets
from pyscl.read import read, write
from pyscl.topology import irreducible_closed, scott_closed_family
from pyscl.witnesses import (
    WITNESSES,
    property_m_evidence,
    verify_witness_claims,
)

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _cell(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"

    if isinstance(value, (list, tuple)):
        return "{" + ", ".join(_cell(item) for item in value) + "}"

    return "-" if value is None else str(value)


def _is_number(value: object) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def tabulate(headers: list[str], rows: Sequence[Sequence[object]]) -> str:
    """
    Lays out fact rows as a plain text table. Booleans print as yes or no,
    element lists as sets, and missing values as a dash. Numbers are right
    aligned, everything else is left aligned.
    """
    cells = [[_cell(value) for value in row] for row in rows]
    lens = [
        max([len(hdr), *(len(row[col]) for row in cells)])
        for col, hdr in enumerate(headers)
    ]

    lines = [
        "  ".join(hdr.ljust(ln) for hdr, ln in zip(headers, lens)).rstrip(),
        "  ".join("-" * ln for ln in lens),
    ]

    for row, values in zip(cells, rows):
        parts = [
            cell.rjust(ln) if _is_number(val) else cell.ljust(ln)
            for cell, val, ln in zip(row, values, lens)
        ]
        lines.append("  ".join(parts).rstrip())

    return "\n".join(lines)


def _emit(config: RunConfig, text: str, data: dict):
    # JSON goes to stdout in JSON mode, and to the output file if one is set.
    doc = json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    if config.out is not None:
        with open(config.out, "w") as fh:
            fh.write(doc)

    print(doc if config.fmt == "json" else text, end="")


def _reports_text(reports: list[CheckReport]) -> str:
    return "".join(str(report) + "\n" for report in reports)


def _exit_code(reports: list[CheckReport]) -> int:
    if all(report.passed() for report in reports):
        return EXIT_PASS

    return EXIT_VIOLATION


def check(config: RunConfig, file: Path, which: str = "all") -> int:
    """
    Runs the check suites on the poset in the given file.
    """
    poset = read(file)
    facts, reports = check_poset(poset, which, config.caps)  # type: ignore

    rows = list(facts.items())
    text = tabulate(["Fact", "Value"], rows) + "\n\n"
    text += _reports_text(reports)

    data = {
        "file": str(file),
        "facts": facts,
        "reports": [report.to_dict() for report in reports],
    }

    _emit(config, text, data)
    return _exit_code(reports)


def enumerate_classes(config: RunConfig, size: int) -> int:
    """
    Enumerates the posets of the given size up to isomorphism, and writes
    one ``.poset`` file per class to the output directory, if one is given.
    """
    printer = ProgressPrinter(should_print=config.fmt == "text")
    printer.start("enumerate", size)

    start = perf_counter()
    for smaller in range(1, size):
        classes = enumerate_posets(smaller, config.caps.enumeration_max)
        printer.size(smaller, len(classes), perf_counter() - start)

    posets = enumerate_posets(size, config.caps.enumeration_max)
    printer.size(size, len(posets), perf_counter() - start)

    files = []
    if config.out is not None:
        config.out.mkdir(parents=True, exist_ok=True)  # just in case

        for idx, poset in enumerate(posets):
            where = config.out / f"size{size}_{idx:04d}.poset"
            write(where, poset)
            files.append(str(where))

    if config.fmt == "json":
        data = {"size": size, "classes": len(posets), "files": files}
        print(json.dumps(data, indent=2))

    return EXIT_PASS


def _mapper(jobs: int, display: bool) -> Mapper:
    if jobs == 1:

        def mapper(func: Callable, rows: Iterable) -> Iterable:
            return map(func, tqdm(rows, unit="row", disable=not display))

        return mapper

    return partial(
        process_map, max_workers=jobs, unit="row", disable=not display
    )


def scan(config: RunConfig, max_size: int) -> int:
    """
    Runs the faithfulness scan over all posets of one to ``max_size``
    elements, distributing the rows of the scan over ``config.jobs`` worker
    processes.
    """
    display = config.fmt == "text"
    printer = ProgressPrinter(should_print=display)
    printer.start("scan", max_size)

    cap = config.caps.enumeration_max
    if max_size > cap:
        msg = f"Cannot scan posets of size {max_size} > {cap}."
        raise BoundExceededError(msg)

    start = perf_counter()
    for size in range(1, max_size + 1):
        classes = enumerate_posets(size, cap)
        printer.size(size, len(classes), perf_counter() - start)

    mapper = _mapper(config.jobs, display)
    report = scl_faithful_scan(max_size, cap, mapper)

    if config.out is not None:
        report.to_json(config.out, config.timing)

    if config.fmt == "json":
        print(report.to_json(timing=config.timing), end="")
    else:
        print(report)
        printer.end_scan(report)

    return EXIT_PASS if report.passed() else EXIT_VIOLATION


def witness(config: RunConfig, name: str, bound: int) -> int:
    """
    Runs the bounded claim checks on the named witness dcpo, together with a
    bounded search for evidence against property M.
    """
    dcpo = WITNESSES[name]
    cap = config.caps.witness_bound(name)

    printer = ProgressPrinter(should_print=config.fmt == "text")
    printer.start(f"witness {name}", bound)

    reports = verify_witness_claims(dcpo, bound, config.seed, cap)
    m_bound = min(bound, PROPERTY_M_BOUND)
    reports.append(property_m_evidence(dcpo, m_bound, cap + 1))

    data = {
        "witness": name,
        "bound": bound,
        "seed": config.seed,
        "reports": [report.to_dict() for report in reports],
    }

    _emit(config, _reports_text(reports), data)
    printer.end_checks(reports)
    return _exit_code(reports)


def export(config: RunConfig, file: Path, what: str, fmt: str) -> int:
    """
    Exports the Hasse diagram of the poset in the given file, of its Scott
    closed set lattice, or of its irreducible closed sets, as DOT text or as
    a PNG image.
    """
    poset = read(file)
    labels: Optional[list] = None

    if what == "csigma":
        family = scott_closed_family(poset, config.caps.family_size)
        lattice = lattice_of(family)
        poset, labels = lattice.order, list(family)
    elif what == "irr":
        irr = irreducible_closed(poset, max_members=config.caps.family_size)
        poset, labels = irr.order, list(irr.elements)

    if fmt == "png":
        if config.out is None:
            raise ValueError("PNG export requires --out.")

        import matplotlib.pyplot as plt

        from pyscl.plotting import plot_hasse

        fig, ax = plt.subplots()
        plot_hasse(poset, labels, title=f"{file.stem}: {what}", ax=ax)
        fig.savefig(config.out)
        plt.close(fig)
        return EXIT_PASS

    dot = to_dot(poset, labels, name=file.stem)

    if config.out is not None:
        with open(config.out, "w") as fh:
            fh.write(dot)
    else:
        print(dot, end="")

    return EXIT_PASS


def _parser() -> argparse.ArgumentParser:
    description = """
    This program is a command line interface for studying Scott closed set
    lattices of finite posets, and bounded windows of two infinite dcpos.
    """
    parser = argparse.ArgumentParser(prog="pyscl", description=description)

    common = argparse.ArgumentParser(add_help=False)
    reporting = argparse.ArgumentParser(add_help=False)

    msg = """
    Optional run configuration file (in TOML format), with [caps] and [run]
    sections. Environment variables override its caps, and flags override
    everything.
    """
    common.add_argument("--config_loc", type=Path, help=msg)

    reporting.add_argument(
        "--format",
        dest="fmt",
        choices=["text", "json"],
        help="Report format. Default 'text'.",
    )

    msg = "File (or, for 'enumerate', directory) to write output to."
    common.add_argument("--out", type=Path, help=msg)

    cmds = parser.add_subparsers(dest="command", required=True)

    cmd = cmds.add_parser(
        "check", parents=[common, reporting], help="Check a poset."
    )
    cmd.add_argument("file", type=Path, help="Poset file to check.")
    cmd.add_argument(
        "--which",
        default="all",
        choices=SUITES,
        help="Check suite to run. Default 'all'.",
    )

    cmd = cmds.add_parser(
        "enumerate", parents=[common, reporting], help="Enumerate posets."
    )
    msg = "Number of elements."
    cmd.add_argument("--size", type=int, required=True, help=msg)

    cmd = cmds.add_parser(
        "scan", parents=[common, reporting], help="Run the faithfulness scan."
    )
    msg = "Maximum number of poset elements."
    cmd.add_argument("--max-size", type=int, required=True, help=msg)
    msg = "Number of worker processes. Default 1."
    cmd.add_argument("--jobs", type=int, help=msg)
    msg = "Include the run-time in the JSON report."
    cmd.add_argument("--timing", action="store_true", default=None, help=msg)

    cmd = cmds.add_parser(
        "witness", parents=[common, reporting], help="Check a witness dcpo."
    )
    cmd.add_argument("name", choices=WITNESSES.keys(), help="Witness name.")
    cmd.add_argument("--bound", type=int, required=True, help="Bound.")
    msg = "Seed for the random samples beyond the window."
    cmd.add_argument("--seed", type=int, help=msg)

    cmd = cmds.add_parser(
        "export", parents=[common], help="Export a Hasse diagram."
    )
    cmd.add_argument("file", type=Path, help="Poset file to export.")
    cmd.add_argument(
        "--what",
        default="poset",
        choices=["poset", "csigma", "irr"],
        help="What to draw. Default 'poset'.",
    )
    cmd.add_argument(
        "--format",
        dest="image",
        default="dot",
        choices=["dot", "png"],
        help="Output format. Default 'dot'.",
    )

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = vars(_parser().parse_args(argv))
    except SystemExit as exc:  # argparse exits 2 on usage errors
        return EXIT_USAGE if exc.code else EXIT_PASS

    command = args.pop("command")
    run_fields = ("config_loc", "fmt", "out", "jobs", "seed", "timing")
    run = {key: args.pop(key) for key in run_fields if key in args}

    try:
        config = RunConfig.from_sources(command, **run)

        if command == "check":
            return check(config, args["file"], args["which"])

        if command == "enumerate":
            return enumerate_classes(config, args["size"])

        if command == "scan":
            return scan(config, args["max_size"])

        if command == "witness":
            return witness(config, args["name"], args["bound"])

        return export(config, args["file"], args["what"], args["image"])
    except PosetParseError as exc:
        print(f"pyscl: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:  # includes BoundExceededError
        print(f"pyscl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
