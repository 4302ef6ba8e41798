"""Exact analysis of partial catalysts for probabilistic entanglement conversion.

Schmidt-coefficient vectors are handled as exact :class:`fractions.Fraction`
tuples (:class:`~partcat.ratvec.ProbVec`).
"""
__version__ = "0.1.0"

from .ratvec import ProbVec, vec, tensor, direct_sum, y_lambda, is_majorized, is_super_majorized
from .transform import max_prob, critical_set, s_membership, s_extreme_points
from .catalysis import (
    PreconditionError,
    is_partial_catalyst,
    pcon_predicate,
    partial_catalyst_exists,
    construct_geometric_catalyst,
    two_dim_interval,
)
from .search import decide_k_dim, min_catalyst_dimension, grid_oracle, best_prob_at_dim
from .structure import t_k_membership, t_equals_s, t_separating_witness, t_extreme_points

__all__ = [
    "ProbVec", "vec", "tensor", "direct_sum", "y_lambda", "is_majorized", "is_super_majorized",
    "max_prob", "critical_set", "s_membership", "s_extreme_points",
    "PreconditionError", "is_partial_catalyst", "pcon_predicate", "partial_catalyst_exists",
    "construct_geometric_catalyst", "two_dim_interval",
    "decide_k_dim", "min_catalyst_dimension", "grid_oracle", "best_prob_at_dim",
    "t_k_membership", "t_equals_s", "t_separating_witness", "t_extreme_points",
]
