"""mcnum: exact monochromatic connection numbers of small graphs.

A monochromatic connection coloring assigns colors to edges so that every
vertex pair is joined by a single-color path; the mc-number of a graph is the
maximum number of colors such a coloring can use.  This package computes it
exactly for desk-scale graphs, classifies graphs by the structural
characterizations of the extremal values, constructs optimal colorings from
family witnesses, and cross-validates all routes against each other over
exhaustive small-graph corpora.
"""

from .graph import (Graph, Graph6Error, GraphTooLargeError, ShapeReport,
                    complete_bipartite, complete_graph, complete_multipartite,
                    cycle_graph, emit_graph6, empty_graph, has_minor,
                    parse_graph6, path_graph, shape, star_graph)
from .structure import (CutSet, DisconnectedGraphError, EmptyGraphError,
                        chromatic_number, cut_vertices, diameter,
                        is_outerplanar, is_planar, minimum_cut_set,
                        vertex_connectivity)
from .solver import (ExactResult, MCColoring, NodeBudgetExceeded,
                     SearchOptions, SolverLimitError, VerificationReport,
                     mc_exact, mc_exact_unrestricted, spanning_tree_coloring,
                     verify_coloring)
from .families import (FamilyA, FamilyB1, FamilyB2, FamilyB3, FamilyWitness,
                       InvalidWitnessError, P1, P2, PerfectlyConnected,
                       SpecialJoin, recognize_family_a, recognize_family_b,
                       recognize_p1, recognize_p2,
                       recognize_perfectly_connected, recognize_special_join,
                       special_join_kinds, validate_witness)
from .classifier import (BoundsVerdict, Exact, MCClassification, classify,
                         construct_coloring, quick_floor)
from .corpus import CorpusReport, Violation, run_corpus

__version__ = "0.1.0"

__all__ = [
    "Graph", "Graph6Error", "GraphTooLargeError", "ShapeReport",
    "complete_bipartite", "complete_graph", "complete_multipartite",
    "cycle_graph", "emit_graph6", "empty_graph", "has_minor", "parse_graph6",
    "path_graph", "shape", "star_graph",
    "CutSet", "DisconnectedGraphError", "EmptyGraphError", "chromatic_number",
    "cut_vertices", "diameter", "is_outerplanar", "is_planar",
    "minimum_cut_set", "vertex_connectivity",
    "ExactResult", "MCColoring", "NodeBudgetExceeded", "SearchOptions",
    "SolverLimitError", "VerificationReport", "mc_exact",
    "mc_exact_unrestricted", "spanning_tree_coloring", "verify_coloring",
    "FamilyA", "FamilyB1", "FamilyB2", "FamilyB3", "FamilyWitness",
    "InvalidWitnessError", "P1", "P2", "PerfectlyConnected", "SpecialJoin",
    "recognize_family_a", "recognize_family_b", "recognize_p1", "recognize_p2",
    "recognize_perfectly_connected", "recognize_special_join",
    "special_join_kinds", "validate_witness",
    "BoundsVerdict", "Exact", "MCClassification", "classify",
    "construct_coloring", "quick_floor",
    "CorpusReport", "Violation", "run_corpus",
]
