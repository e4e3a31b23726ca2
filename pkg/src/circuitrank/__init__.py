"""Exact graph invariants and verification of circuit-rank multiplicity bounds."""

from .bounds import BoundCase, BoundReport, GraphProfile
from .cycles import (
    EdgeSubset,
    TauResult,
    beta_via_parity_laplacian,
    bicycle_basis,
    cut_basis,
    cycle_basis,
    odd_cycle_packing,
)
from .exact import (
    build_matrix,
    integer_eigenvalue_candidates,
    mod2_reduce,
    multiplicity,
    multiplicity_alpha,
    rank_over_Q,
)
from .f2 import BinaryMatrix, F2Subspace, f2_dot_parity, f2_intersect, f2_kernel_basis, f2_rank_nullity
from .families import generate
from .graph import Graph, GraphStats, compute_stats, make_even, make_odd
from .graph6 import Graph6Error, emit_graph6, parse_graph6

__version__ = "0.1.0"
