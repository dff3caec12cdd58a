"""
Compilers from source problems to contraction instances, with the roles of
the constructed vertices.
"""
# flake8: noqa F401
from .claw_free import (
    build_clawfree_gadget,
    clause_gadget_lower_bound,
    variable_gadget_lower_bound,
)
from .cnf import CnfFormula
from .even_ds import build_even_ds_gadget
from .gadget import GadgetBuilder, GadgetOutput, read_role_map
from .subdivision import (
    build_subdivision_gadget,
    cycle_free_instance,
    four_subdivide_all,
    rounds_for_girth,
)
from .two_p4 import build_2p4_gadget
from .witness import tds_witness_from_assignment

__all__ = (
    "CnfFormula",
    "GadgetBuilder",
    "GadgetOutput",
    "build_2p4_gadget",
    "build_clawfree_gadget",
    "build_even_ds_gadget",
    "build_subdivision_gadget",
    "clause_gadget_lower_bound",
    "cycle_free_instance",
    "four_subdivide_all",
    "read_role_map",
    "rounds_for_girth",
    "tds_witness_from_assignment",
    "variable_gadget_lower_bound",
)
