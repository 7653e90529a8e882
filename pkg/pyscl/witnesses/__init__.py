from .SymbolicDcpo import TOP as TOP
from .SymbolicDcpo import SymbolicDcpo as SymbolicDcpo
from .SymbolicDcpo import Window as Window
from .SymbolicDcpo import window as window
from .SymbolicDcpo import with_top as with_top
from .johnstone import INFINITY as INFINITY
from .johnstone import JOHNSTONE as JOHNSTONE
from .johnstone import JohnstoneElement as JohnstoneElement
from .johnstone import johnstone_leq as johnstone_leq
from .kou import KOU as KOU
from .kou import Point as Point
from .kou import Triple as Triple
from .kou import kou_leq as kou_leq
from .property_m import property_m_evidence as property_m_evidence
from .registry import WITNESSES as WITNESSES
from .verify import check_order_axioms as check_order_axioms
from .verify import verify_witness_claims as verify_witness_claims
