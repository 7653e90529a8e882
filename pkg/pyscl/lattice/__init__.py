from .beneath import beneath as beneath
from .beneath import beneath_table as beneath_table
from .beneath import c_compact_elements as c_compact_elements
from .is_distributive import is_distributive as is_distributive
from .is_vee_irreducible import is_vee_irreducible as is_vee_irreducible
from .isomorphism import LatticeIsomorphism as LatticeIsomorphism
from .isomorphism import lattice_isomorphic as lattice_isomorphic
from .join_irreducibles import (
    join_irreducible_elements as join_irreducible_elements,
)
from .join_irreducibles import join_irreducibles as join_irreducibles
from .lattice_of import lattice_of as lattice_of
