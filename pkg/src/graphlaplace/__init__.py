"""Bernardi, chromatic and Potts polynomials of small multigraphs, the Laplace
operator on spaces of graphs, and exhaustive checks of the identities that
relate them.  All arithmetic is exact."""

from .graphs import (
    DirectedGraph,
    GraphParseError,
    GuardError,
    UndirectedGraph,
    betti0,
    enumerate_directed,
    enumerate_undirected,
    forget,
    is_acyclic,
    is_totally_cyclic,
    isolated_vertices,
    loop_completion_directed,
    loop_completions_undirected,
    parse_graph,
    rank,
    sinks,
    strip_loops,
    subgraphs,
    unrank,
)
from .invariants import (
    bernardi,
    bernardi_eval,
    chi_geq,
    chi_gt,
    full_chromatic,
    potts,
    potts_sokal,
)
from .poly import MultiPoly, format_poly, parse_poly
from .space import (
    GraphVector,
    acyclic_sum,
    b_operator,
    det_element,
    det_minor,
    laplace,
    laplace_undirected,
    universal_bernardi,
    universal_chi,
    universal_potts,
    universal_truncated_bernardi,
    universal_truncated_potts,
)
from .verify import IdentityReport, moebius_invert, verify_all

__version__ = "0.1.0"
