"""Domination mappings into Hamming balls: constructions, bounds, decisions."""

from .ball import BallParams, ball_size, iter_ball, rank, unrank
from .bounds import (
    BoundReport,
    check_sum_condition,
    check_tight_condition,
    general_bound,
    general_bound_value,
    mu_of_w1,
    nu_lower_bound,
    nu_upper_bound,
    optimal_degree_distribution,
)
from .constructions import (
    example_342,
    extend_n,
    identity_mapping,
    product,
    relax_w,
    shorten,
    w1_perfect,
    w2_recursive,
)
from .errors import (
    ConstructionError,
    ConversionError,
    DecodeError,
    DegenerateError,
    DimensionError,
    DomainError,
    DomapError,
    ParseError,
    ResourceError,
)
from .graphs import DominationGraph, dominates, iter_dominated
from .mapping import (
    ACCEPT,
    REJECT,
    DescendantArrayPair,
    DominationMapping,
    Verdict,
    decode,
    encode,
    format_mapping,
    from_descendant_arrays,
    load_mapping,
    parse_mapping,
    save_mapping,
    to_descendant_arrays,
    verify_mapping,
    verify_table,
)
from .matching import (
    CompatibilityGraph,
    build_compatibility,
    decide_all_graphs,
    decide_graph,
    hall_violator,
    max_matching,
)
from .reduced_lp import (
    EquitableSplit,
    OrbitIndex,
    ReducedLP,
    build_reduced_lp,
    coefficient_C,
    decide_lp,
    dump_astar,
    omega,
    orbit_size,
    solve_reduced_lp,
)
from .asymptotic import check_cond1, check_cond2, closure, psi, psi_brute, xi

__all__ = [name for name in dir() if not name.startswith("_")]
