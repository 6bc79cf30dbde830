"""Stratified spaces, gluing of closed sets across strata, and quantum-torus centers."""
from .poset import Poset, PosetError, covers, to_dot, validate_poset
from .qtorus import CenterLattice, QTorus, center_lattice, hermite_normal_form, integer_kernel
from .strat import (
    ComorphismRule,
    FiniteMap,
    FunctionRule,
    GluedSpace,
    PhiMap,
    StratificationData,
    StratificationError,
    TableRule,
    check_phi_axioms,
    closure_in_glued,
    extract_stratification,
    ftopg,
    glue_topology,
    is_glued_closed,
    stratify_by_specialization,
)
from .topology import ClosedSet, ClosedSetError, FiniteSpace, VarietySpace, all_topologies

__version__ = "0.1.0"
