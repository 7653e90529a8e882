from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Literal, Mapping, Optional, Union

import tomli

from pyscl.constants import (
    DEFAULT_SEED,
    MAX_BENEATH_SIZE,
    MAX_ENUMERATION_SIZE,
    MAX_FAMILY_SIZE,
    MAX_JOHNSTONE_BOUND,
    MAX_KOU_BOUND,
)

Format = Literal["text", "json"]

CAP_VARIABLES = {
    "family_size": "PYSCL_FAMILY_SIZE",
    "beneath_size": "PYSCL_BENEATH_SIZE",
    "enumeration_max": "PYSCL_ENUMERATION_MAX",
    "johnstone_bound": "PYSCL_JOHNSTONE_BOUND",
    "kou_bound": "PYSCL_KOU_BOUND",
}
"""
Environment variables that override the caps, by cap name.
"""


@dataclass
class Caps:
    """
    Upper limits on the sizes of the objects the workbench computes with.
    Requests beyond a cap are refused with a
    :class:`~pyscl.exceptions.BoundExceededError`.

    Attributes
    ----------
    family_size
        Maximum number of Scott closed sets in a closed family.
    beneath_size
        Maximum lattice size for which the beneath relation is decided.
    enumeration_max
        Maximum poset size for enumeration and faithfulness scans.
    johnstone_bound
        Maximum window bound for Johnstone's dcpo and its star variant.
    kou_bound
        Maximum window bound for Kou's dcpo and its star variant.

    Raises
    ------
    ValueError
        When any of the caps is not positive.
    """

    family_size: int = MAX_FAMILY_SIZE
    beneath_size: int = MAX_BENEATH_SIZE
    enumeration_max: int = MAX_ENUMERATION_SIZE
    johnstone_bound: int = MAX_JOHNSTONE_BOUND
    kou_bound: int = MAX_KOU_BOUND

    def __post_init__(self):
        for fld in fields(self):
            if getattr(self, fld.name) <= 0:
                raise ValueError(f"{fld.name} <= 0 not understood.")

    @classmethod
    def from_env(
        cls,
        env: Optional[Mapping[str, str]] = None,
        base: Optional[Caps] = None,
    ) -> Caps:
        """
        Applies cap overrides from the environment variables
        ``PYSCL_FAMILY_SIZE``, ``PYSCL_BENEATH_SIZE``,
        ``PYSCL_ENUMERATION_MAX``, ``PYSCL_JOHNSTONE_BOUND`` and
        ``PYSCL_KOU_BOUND``.

        Parameters
        ----------
        env
            Environment to read. Defaults to :data:`os.environ`.
        base
            Caps to override. Defaults to the default caps.

        Raises
        ------
        ValueError
            When a variable is set to something other than a positive
            integer.
        """
        env = os.environ if env is None else env
        base = cls() if base is None else base

        overrides = {}
        for name, var in CAP_VARIABLES.items():
            if var not in env:
                continue

            try:
                overrides[name] = int(env[var])
            except ValueError as exc:
                msg = f"{var}={env[var]!r} not understood."
                raise ValueError(msg) from exc

        return replace(base, **overrides)

    def witness_bound(self, name: str) -> int:
        """
        Returns the window cap that applies to the named witness.
        """
        if name.startswith("johnstone"):
            return self.johnstone_bound

        return self.kou_bound


@dataclass
class RunConfig:
    """
    Configuration of a single command line run.

    Attributes
    ----------
    command
        The subcommand that is run.
    caps
        Size caps for the run.
    jobs
        Number of worker processes. Only the faithfulness scan uses more than
        one.
    fmt
        Report format, either ``'text'`` or ``'json'``.
    out
        Output location, if the command writes to a file or directory.
    seed
        Seed for random sampling beyond witness windows.
    timing
        Whether to include wall-clock timings in JSON reports. Reports with
        timings are not reproducible byte for byte.

    Raises
    ------
    ValueError
        When ``jobs`` is not positive, or ``fmt`` is not a known format.
    """

    command: str
    caps: Caps = field(default_factory=Caps)
    jobs: int = 1
    fmt: Format = "text"
    out: Optional[Path] = None
    seed: int = DEFAULT_SEED
    timing: bool = False

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs < 1 not understood.")

        if self.fmt not in ("text", "json"):
            raise ValueError(f"Format {self.fmt!r} not understood.")

    @classmethod
    def from_sources(
        cls,
        command: str,
        config_loc: Optional[Union[Path, str]] = None,
        env: Optional[Mapping[str, str]] = None,
        **flags: Any,
    ) -> RunConfig:
        """
        Builds a run configuration from, in increasing order of precedence,
        the defaults, a TOML configuration file, the environment, and the
        command line flags.

        The TOML file may contain a ``[caps]`` section with the fields of
        :class:`Caps`, and a ``[run]`` section with ``jobs``, ``fmt``,
        ``seed`` and ``timing``. The environment only overrides caps. Flags
        that are ``None`` are treated as not given.

        Parameters
        ----------
        command
            The subcommand that is run.
        config_loc
            Optional location of a TOML configuration file.
        env
            Environment to read cap overrides from. Defaults to
            :data:`os.environ`.
        flags
            Run fields given on the command line.
        """
        if config_loc is not None:
            with open(config_loc, "rb") as fh:
                config = tomli.load(fh)
        else:
            config = {}

        caps = Caps.from_env(env, Caps(**config.get("caps", {})))
        given = {key: val for key, val in flags.items() if val is not None}
        run = {**config.get("run", {}), **given}

        if "out" in run:
            run["out"] = Path(run["out"])

        return cls(command, caps, **run)
