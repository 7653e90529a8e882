import sys
from dataclasses import asdict
from importlib.metadata import version

from pyscl.RunConfig import Caps

_PACKAGES = ("pyscl", "numpy", "matplotlib", "tqdm", "tomli")


def show_versions():
    """
    Prints the installed versions of pyscl and its dependencies, and the caps
    that are in effect after environment overrides. Useful when filing bug
    reports.

    Examples
    --------
    >>> import pyscl
    >>> pyscl.show_versions()  # doctest: +SKIP
    INSTALLED VERSIONS
    ------------------
              pyscl: 0.1.0a0
              numpy: 1.26.4
         matplotlib: 3.8.2
               tqdm: 4.66.1
              tomli: 2.0.1
             Python: 3.11.7
    <BLANKLINE>
    CAPS
    ----
        family_size: 4096
    ...
    """
    installed = {pkg: version(pkg) for pkg in _PACKAGES}
    installed["Python"] = ".".join(map(str, sys.version_info[:3]))

    print("INSTALLED VERSIONS")
    print("------------------")
    for name, value in installed.items():
        print(f"{name:>15}: {value}")

    print("\nCAPS")
    print("----")
    for name, value in asdict(Caps.from_env()).items():
        print(f"{name:>15}: {value}")
