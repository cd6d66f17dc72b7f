"""Executable objects from extremal hypergraph theory.

r-uniform hypergraphs with forbidden-pattern detection, Steiner systems by
exact cover, hypergraph Lagrangians, blowups, edit distances to blowup
families, weight-shifting symmetrization and exact Turán numbers for small n.
"""

from ._jit import JIT_ENABLED, backend
from .blowup import (
    BlowupSpec,
    EdgeClassification,
    blow_up,
    classify_edges,
    clone_all,
    clone_vertex,
    epsilon_balance,
    recover_partition,
    recursion_violations,
    transversal_violations,
)
from .designs import (
    ExactCoverInstance,
    SteinerSystem,
    build_steiner,
    solve_exact_cover,
    steiner_constants,
    verify_steiner,
)
from .extremal import SearchResult, bollobas_formula, extremal_witness_check, max_free_edges
from .hypercore import (
    Hypergraph,
    PatternHit,
    covers_pairs,
    find_clique,
    find_generalized_triangle,
    find_sigma_member,
    find_thin_violation,
    induce,
    link,
    parse_hgr,
    to_hgr,
)
from .lagrange import (
    OptResult,
    WeightedHypergraph,
    check_balanced,
    critical_residual,
    lambda_eval,
    lambda_grad,
    maximize_lambda,
)
from .metric import (
    DistanceResult,
    check_distance_transfer,
    distance_to_blowups,
    symmetric_difference,
    weighted_distance_witness,
)
from .symmetrize import SymmetrizationTrace, find_uncovered_pair, symmetrize, symmetrize_step

__version__ = "0.1.0"

__all__ = [
    "backend",
    "blow_up",
    "BlowupSpec",
    "bollobas_formula",
    "build_steiner",
    "check_balanced",
    "check_distance_transfer",
    "classify_edges",
    "clone_all",
    "clone_vertex",
    "covers_pairs",
    "critical_residual",
    "distance_to_blowups",
    "DistanceResult",
    "EdgeClassification",
    "epsilon_balance",
    "ExactCoverInstance",
    "extremal_witness_check",
    "find_clique",
    "find_generalized_triangle",
    "find_sigma_member",
    "find_thin_violation",
    "find_uncovered_pair",
    "Hypergraph",
    "induce",
    "JIT_ENABLED",
    "lambda_eval",
    "lambda_grad",
    "link",
    "max_free_edges",
    "maximize_lambda",
    "OptResult",
    "parse_hgr",
    "PatternHit",
    "recover_partition",
    "recursion_violations",
    "SearchResult",
    "solve_exact_cover",
    "steiner_constants",
    "SteinerSystem",
    "symmetric_difference",
    "SymmetrizationTrace",
    "symmetrize",
    "symmetrize_step",
    "to_hgr",
    "transversal_violations",
    "verify_steiner",
    "weighted_distance_witness",
    "WeightedHypergraph",
]
