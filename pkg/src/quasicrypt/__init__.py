"""Finite quasigroups: subquasigroup enumeration, polynomial completeness
checks, and finite-field constructions without proper subquasigroups."""

from .construction import (
    ConstructionParams,
    build_table,
    choose_c,
    construct_suitable,
    konig_rados_count,
    range_of_f,
    standard_params,
)
from .finite_field import FieldCtx, FieldElem, make_field
from .properties import (
    affine_criterion,
    count_associative_triples,
    is_affine,
    is_polynomially_complete,
    is_simple,
    principal_congruence,
    two_generation_check,
)
from .quasigroup import QTable, cycle_decomposition, isotope, load_table, mult_group_orbit_pairs
from .subquasigroups import (
    diagonal_core,
    find_all_subquasigroups,
    generated_by,
    is_closed,
    no_proper_subq_via_diagonal,
)

__version__ = "0.1.0"
