"""Closure systems over implicational bases with pairwise conflicts.

The package models a universe of elements, an implicational base whose
closed sets form a lattice, and a graph of mutually exclusive element
pairs. Its central task is enumerating every maximal closed set that
avoids all conflicts, via minimal keys of an augmented base and
hypergraph transversal duality, with a brute-force oracle, structural
lattice checks, and generators for instance families of known shape.
"""

from .analysis import (
    AnalysisReport,
    ArrowRelations,
    CheckResult,
    DRelation,
    analyze,
    arrow_relations,
    check_atomistic,
    check_biatomic,
    check_chain_condition,
    check_distributive,
    check_independent,
    check_mingen_independence,
    check_modular,
    check_standard,
    d_relation,
    has_d_cycle,
    verify_log_bound,
)
from .closure import (
    ClosedSetFamily,
    MinGenRecord,
    caratheodory_number,
    close,
    co_atoms,
    covers,
    enumerate_closed_sets,
    is_closed,
    meet_irreducibles,
    minimal_generators,
)
from .core import (
    EXHAUSTIVE_LIMIT,
    INDEPENDENCE_BOUND,
    KEY_CAP,
    MAX_GROUND,
    MIS_CAP,
    ConsistencyGraph,
    ElemSet,
    GroundSet,
    Implication,
    ImplicationalBase,
    ValidationReport,
    format_instance,
    format_sets,
    load_instance,
    parse_instance,
    validate_instance,
)
from .errors import (
    ClosureError,
    EmptyGraph,
    GroundSetTooLarge,
    HypothesesNotMet,
    InvalidParams,
    MismatchedGroundSets,
    NoDecomposition,
    NotASuperkey,
    NotClosed,
    NotStandard,
    OutputLimitExceeded,
    ParseError,
    SetTooLarge,
)
from .generators import (
    CnfFormula,
    Poset,
    gen_cnf_lower_bounded,
    gen_exponential,
    gen_fano,
    gen_poset_convexity,
    gen_projective_gf2,
    gen_random,
    gen_random_poset,
    gen_reduction,
    parse_dimacs_cnf,
)
from .keys import (
    KeyHypergraph,
    augment_with_inconsistency,
    brute_force_keys,
    enumerate_keys,
    key_decomposition,
    minimize_superkey,
)
from .solver import SolutionSet, SolveStats, brute_force_solve, is_solution, solve
from .transversal import (
    Hypergraph,
    is_independent,
    maximal_independent_sets,
    minimal_transversals,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ArrowRelations",
    "CheckResult",
    "ClosedSetFamily",
    "ClosureError",
    "CnfFormula",
    "ConsistencyGraph",
    "DRelation",
    "ElemSet",
    "EmptyGraph",
    "EXHAUSTIVE_LIMIT",
    "GroundSet",
    "GroundSetTooLarge",
    "Hypergraph",
    "HypothesesNotMet",
    "Implication",
    "ImplicationalBase",
    "INDEPENDENCE_BOUND",
    "InvalidParams",
    "KEY_CAP",
    "KeyHypergraph",
    "MAX_GROUND",
    "MIS_CAP",
    "MinGenRecord",
    "MismatchedGroundSets",
    "NoDecomposition",
    "NotASuperkey",
    "NotClosed",
    "NotStandard",
    "OutputLimitExceeded",
    "ParseError",
    "Poset",
    "SetTooLarge",
    "SolutionSet",
    "SolveStats",
    "ValidationReport",
    "analyze",
    "arrow_relations",
    "augment_with_inconsistency",
    "brute_force_keys",
    "brute_force_solve",
    "caratheodory_number",
    "check_atomistic",
    "check_biatomic",
    "check_chain_condition",
    "check_distributive",
    "check_independent",
    "check_mingen_independence",
    "check_modular",
    "check_standard",
    "close",
    "co_atoms",
    "covers",
    "d_relation",
    "enumerate_closed_sets",
    "enumerate_keys",
    "format_instance",
    "format_sets",
    "gen_cnf_lower_bounded",
    "gen_exponential",
    "gen_fano",
    "gen_poset_convexity",
    "gen_projective_gf2",
    "gen_random",
    "gen_random_poset",
    "gen_reduction",
    "has_d_cycle",
    "is_closed",
    "is_independent",
    "is_solution",
    "key_decomposition",
    "load_instance",
    "maximal_independent_sets",
    "meet_irreducibles",
    "minimal_generators",
    "minimal_transversals",
    "minimize_superkey",
    "parse_dimacs_cnf",
    "parse_instance",
    "solve",
    "validate_instance",
    "verify_log_bound",
]
