"""Exact star coloring, star-criticality and small-graph verification."""

from .coloring import (
    chromatic_number,
    find_bicolored_p4,
    is_proper,
    is_star_coloring,
    star_chromatic_number,
    star_chromatic_number_oracle,
)
from .criticality import classify_critical, is_k_critical_direct
from .graph import Graph, complement, decode_graph6, delete_edge, encode_graph6, from_edge_list
from .patterns import PatternKind, find_induced, is_free

__version__ = "0.1.0"
