from .DomainClass import DomainClass as DomainClass
from .DomainClass import domain_class as domain_class
from .DomainClass import is_continuous as is_continuous
from .DomainClass import is_quasicontinuous as is_quasicontinuous
from .FinFamily import FinFamily as FinFamily
from .FinFamily import fin_sets as fin_sets
from .SpecialElements import SpecialElements as SpecialElements
from .SpecialElements import down_linear_elements as down_linear_elements
from .SpecialElements import (
    quasicontinuous_elements as quasicontinuous_elements,
)
from .SpecialElements import special_elements as special_elements
from .conditions import dl_generation_condition as dl_generation_condition
from .conditions import dl_sup_condition as dl_sup_condition
from .conditions import (
    property_m_generation_condition as property_m_generation_condition,
)
from .conditions import qc_generation_condition as qc_generation_condition
from .m_flat import is_reflexive as is_reflexive
from .m_flat import m_flat as m_flat
from .mub import mub as mub
from .mub import mub_properties as mub_properties
from .scl_faithful_scan import scl_faithful_scan as scl_faithful_scan
from .way_below import way_below as way_below
from .way_below import way_below_fast as way_below_fast
