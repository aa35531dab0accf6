"""Worpitzky compatibility of graphic arrangements and the polynomials attached to it."""

from .alcoves import (
    ShiAlcove,
    enumerate_alcoves_in_P,
    is_admissible,
    is_compatible_geometric,
    upper_closure_contains,
    verify_ceiling_lift,
    vertices,
    walls,
)
from .compatibility import (
    enumerate_decompositions,
    find_compatible_labeling,
    is_compatible_triples,
    is_root_ideal,
    is_strongly_compatible,
)
from .graph import (
    LabeledGraph,
    RootSubset,
    complement,
    enumerate_labeled_graphs,
    parse_edge_list,
    parse_graph6,
    relabel,
    to_graph6,
    to_root_subset,
)
from .orderings import (
    Orientation,
    find_interval_ordering,
    find_umbrella_free_ordering,
    find_unit_interval_ordering,
    is_chordal,
    is_umbrella_free,
    transitive_orientation,
)
from .polynomials import (
    IntPoly,
    RatPoly,
    a_descent_count,
    a_eulerian,
    chromatic,
    chromatic_from_f,
    chromatic_from_w,
    eulerian_recurrence_holds,
    graphic_descent_count,
    graphic_eulerian,
    rank_vector,
    reduced_graphic_eulerian,
)

__version__ = "0.1.0"
