from pyscl.witnesses.SymbolicDcpo import SymbolicDcpo, with_top
from pyscl.witnesses.johnstone import JOHNSTONE
from pyscl.witnesses.kou import KOU

WITNESSES: dict[str, SymbolicDcpo] = {
    "johnstone": JOHNSTONE,
    "kou": KOU,
    "johnstone-star": with_top(JOHNSTONE),
    "kou-star": with_top(KOU),
}
"""
The witness dcpos by name, including their add-top (star) variants.
"""
