MAX_FAMILY_SIZE = 4096
"""
The default maximum number of Scott closed sets a family may contain. The
number of lower sets grows exponentially in the width of a poset, so larger
families are refused rather than silently truncated.
"""

MAX_BENEATH_SIZE = 20
"""
The default maximum lattice size for which the beneath relation is decided.
Deciding beneath enumerates every lower set of the lattice.
"""

MAX_ENUMERATION_SIZE = 6
"""
The default maximum poset size that may be enumerated up to isomorphism.
There are 318 isomorphism classes of six-element posets, and 2045 of seven.
"""

MAX_JOHNSTONE_BOUND = 32
"""
The default maximum window bound for Johnstone's dcpo. A window of bound
:math:`B` has :math:`B(B + 1)` elements.
"""

MAX_KOU_BOUND = 8
"""
The default maximum window bound (numerator and denominator bound) for Kou's
dcpo. The window grows roughly with the fourth power of the bound.
"""

DEFAULT_SEED = 42
"""
Default seed for the random rational samples drawn beyond a witness window.
"""

PROPERTY_M_BOUND = 4
"""
The window bound at which the witness command searches for evidence against
property M. The search compares windows of this bound and the next, over all
pairs of elements.
"""
