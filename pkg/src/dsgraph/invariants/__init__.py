"""Exact graph invariants computed by exhaustive search."""

from .caps import CapExceeded, Caps
from .cliques import (
    CliqueCensus,
    clique_number,
    independence_number_exact,
    is_clique,
    is_maximal_clique,
    iter_maximal_cliques,
    maximal_clique_census,
    maximum_clique,
)
from .coloring import ChromaticResult, chromatic_number_exact, is_proper_colouring
from .domination import domination_number_exact, is_dominating, universal_vertices, upper_domination_exact
from .flow import edge_connectivity_exact, local_edge_connectivity
from .metric import (
    DegreeStats,
    connectivity_and_diameter,
    degree_stats,
    girth_exact,
    is_connected,
    is_eulerian_exact,
    is_triangulated_exact,
    path_witness,
)
from .report import InvariantReport, analyze

__all__ = [
    "CapExceeded",
    "Caps",
    "ChromaticResult",
    "CliqueCensus",
    "DegreeStats",
    "InvariantReport",
    "analyze",
    "chromatic_number_exact",
    "clique_number",
    "connectivity_and_diameter",
    "degree_stats",
    "domination_number_exact",
    "edge_connectivity_exact",
    "girth_exact",
    "independence_number_exact",
    "is_clique",
    "is_connected",
    "is_dominating",
    "is_eulerian_exact",
    "is_maximal_clique",
    "is_proper_colouring",
    "is_triangulated_exact",
    "iter_maximal_cliques",
    "local_edge_connectivity",
    "maximal_clique_census",
    "maximum_clique",
    "path_witness",
    "universal_vertices",
    "upper_domination_exact",
]
