"""Exact commutative-algebra kernel: polynomials, Groebner bases, Hilbert series, Betti numbers."""

from .betti import BettiTable, betti_table, edge_grading, fine_grading, standard_grading
from .edge_ideals import (
    ConjectureProbe,
    DepthReport,
    binomial_edge_ideal,
    chain_of_cliques_order,
    conjecture_probe,
    depth_and_cm,
    edge_betti,
    edge_ideal_gb,
    ini_depth,
    initial_betti,
    initial_ideal_gens,
    is_quadratic_gb,
    complement_chordality_check,
    upper_bipartite_complement,
)
from .groebner import GroebnerBasis, buchberger, normal_form, s_polynomial
from .hilbert import HilbertSeries, hilbert_series_monomial, k_polynomial
from .linalg import dense_rank, sparse_rank
from .poly import DEFAULT_PRIME, Monomial, Polynomial, Ring

__all__ = [
    "BettiTable", "ConjectureProbe", "DEFAULT_PRIME", "DepthReport", "GroebnerBasis",
    "HilbertSeries", "Monomial", "Polynomial", "Ring", "betti_table", "binomial_edge_ideal",
    "buchberger", "chain_of_cliques_order", "conjecture_probe", "dense_rank", "depth_and_cm",
    "edge_betti", "edge_grading", "edge_ideal_gb", "fine_grading", "hilbert_series_monomial",
    "ini_depth", "initial_betti", "initial_ideal_gens", "is_quadratic_gb", "k_polynomial",
    "complement_chordality_check", "upper_bipartite_complement", "normal_form", "s_polynomial", "sparse_rank",
    "standard_grading",
]
