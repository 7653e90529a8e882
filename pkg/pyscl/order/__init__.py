from .add_top import add_top as add_top
from .bounds import greatest_lower_bound as greatest_lower_bound
from .bounds import least_upper_bound as least_upper_bound
from .bounds import lower_bounds as lower_bounds
from .bounds import upper_bounds as upper_bounds
from .build_poset import build_poset as build_poset
from .canonical import canonical_form as canonical_form
from .directed import directed_subsets as directed_subsets
from .directed import directed_sup as directed_sup
from .directed import is_directed as is_directed
from .down_set import down_set as down_set
from .enumerate_posets import enumerate_posets as enumerate_posets
from .enumerate_posets import poset_universe as poset_universe
from .is_chain import is_chain as is_chain
from .isomorphism import OrderIsomorphism as OrderIsomorphism
from .isomorphism import poset_isomorphism as poset_isomorphism
from .lower_sets import lower_set_masks as lower_set_masks
from .subposet import subposet as subposet
