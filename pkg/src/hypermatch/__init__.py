"""Exact computations for perfect matchings in k-uniform hypergraphs."""

from .analysis import (brute_force_threshold, check_hypotheses, closeness, cstar_known,
                       cstar_space_lower, cstar_upper_KOT, regime_compare, threshold_report)
from .combinat import binom, evensum_asymptote, parity_sum, rank_colex, unrank_colex
from .extremal import (BarrierSpec, barrier_min_degree_closed_form, build_barrier,
                       conjectured_threshold, delta_threshold, ext_family, space_barrier,
                       space_barrier_degree)
from .fractional import has_perfect_fractional_matching, max_fractional_matching
from .hcore import (Hypergraph, VertexSubset, complement, degree_of_set, induced,
                    min_ell_degree, neighborhood, random_hypergraph, symmetric_difference)
from .io import read_hypergraph, write_hypergraph
from .matching import (Matching, absorbing_set_count, classify_pair, has_perfect_matching,
                       is_absorbing, max_matching, overlap_stats)

__version__ = "0.1.0"

__all__ = [
    "BarrierSpec", "Hypergraph", "Matching", "VertexSubset", "absorbing_set_count",
    "barrier_min_degree_closed_form", "binom", "brute_force_threshold", "build_barrier",
    "check_hypotheses", "classify_pair", "closeness", "complement", "conjectured_threshold",
    "cstar_known", "cstar_space_lower", "cstar_upper_KOT", "degree_of_set", "delta_threshold",
    "evensum_asymptote", "ext_family", "has_perfect_fractional_matching",
    "has_perfect_matching", "induced", "is_absorbing", "max_fractional_matching",
    "max_matching", "min_ell_degree", "neighborhood", "overlap_stats", "parity_sum",
    "random_hypergraph", "rank_colex", "read_hypergraph", "regime_compare", "space_barrier",
    "space_barrier_degree", "symmetric_difference", "threshold_report", "unrank_colex",
    "write_hypergraph",
]
