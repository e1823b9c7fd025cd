"""Parse class diagrams, map them to predicates over finite systems, and decide
consistency and refinement."""
from .checker import (
    Consistent,
    CycleEvidence,
    Inconsistent,
    NotRefines,
    Refines,
    Scope,
    ScopeTooLarge,
    brute_force_consistency,
    brute_force_refinement,
    canonical_system,
    check_consistency,
    check_refinement,
    enumerate_systems,
    single_inheritance_violations,
)
from .emit import emit_system, emit_term
from .semantics import extract_constraints, holds_atom, in_sem, satisfies
from .syntax import Diagram, ParseError, format_diagram, parse_diagram, parse_files
from .system import (
    BasicType,
    ClassType,
    System,
    VariationConfig,
    p_car_type1,
    p_sub_noncirc,
    p_sub_trans,
    transitive_closure,
    valid,
    well_formed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
