from .ClosedFamily import ClosedFamily as ClosedFamily
from .ClosedFamily import scott_closed_family as scott_closed_family
from .IrrPoset import IrrPoset as IrrPoset
from .IrrPoset import irreducible_closed as irreducible_closed
from .IrrPoset import is_irreducible as is_irreducible
from .classify_space import SpaceClassification as SpaceClassification
from .classify_space import classify_space as classify_space
from .directed_point_sup_check import (
    directed_point_sup_check as directed_point_sup_check,
)
from .scott_closure import scott_closure as scott_closure
from .sobrification import Sobrification as Sobrification
from .sobrification import hull as hull
from .sobrification import (
    hull_kernel_sobrification as hull_kernel_sobrification,
)
