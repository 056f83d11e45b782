"""Digraphs on [n] with exactly one Eulerian tour, and their bijections with
labeled rooted plane trees and labeled parenthesis arrangements."""

from .best import best_count, count_in_trees, count_in_trees_bruteforce, corollary_membership
from .digraph import (
    DiGraph,
    EulerianTour,
    PreconditionError,
    count_tours_up_to_shift,
    cycles_edge_disjoint,
    degrees,
    eulerian_tours_from_edge,
    in_A,
    is_strongly_connected,
    satisfies_lemma1,
    simple_cycles,
    unique_simple_path,
)
from .enumeration import (
    CountReport,
    brute_force_A,
    catalan,
    enumerate_A_via_g,
    expected_A_count,
    verify_theorem1,
)
from .parens import (
    MarkedDigraph,
    ParenArrangement,
    add_loops,
    enumerate_valid,
    inverse_h,
    is_valid,
    map_h,
    remove_loops,
)
from .plane_trees import (
    RootedPlaneTree,
    enumerate_L,
    enumerate_Lprime,
    enumerate_unlabeled,
    involution_f,
    inverse_g,
    is_in_L,
    is_in_Lprime,
    map_g,
)

__version__ = "0.1.0"
