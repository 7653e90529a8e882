from .CheckReport import CheckReport as CheckReport
from .ElementSet import ElementSet as ElementSet
from .FiniteLattice import FiniteLattice as FiniteLattice
from .FinitePoset import FinitePoset as FinitePoset
from .ProgressPrinter import ProgressPrinter as ProgressPrinter
from .RunConfig import Caps as Caps
from .RunConfig import RunConfig as RunConfig
from .ScanReport import ScanReport as ScanReport
from .check_poset import check_poset as check_poset
from .dot import to_dot as to_dot
from .read import dumps as dumps
from .read import parse as parse
from .read import read as read
from .read import write as write
from .show_versions import show_versions as show_versions
