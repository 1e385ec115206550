"""Reconfiguration of odd matchings: flips, exact flip-graph metrics, the
connectivity test, and reductions from quantified SAT and set cover."""

from .errors import (BudgetExceeded, DisconnectedFlipGraph, FormatError, GraphError,
                     IllegalFlip, MatchingError, OddFlipError, OracleError,
                     ReductionError, SearchCapExceeded, SearchError)
from .graph import (Graph, bipartition, cycle_graph, delete_vertices, parse_graph,
                    path_graph, serialize_graph)
from .matching import (FlipSequence, OddMatching, UnionDecomposition, apply_flip,
                       charging_lower_bound, decompose_union, legal_flips,
                       parse_matching, serialize_matching, validate_sequence)
from .search import (DistanceReport, FlipGraph, build_flip_graph, diameter,
                     eccentricity, enumerate_odd_matchings, flip_distance,
                     radius_center)
from .connectivity import (EdgeClass, classify_edge, has_perfect_matching,
                           is_flip_connected, maximum_matching)

__version__ = "0.1.0"
