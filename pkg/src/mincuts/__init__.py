"""Minimal vertex separators: enumeration, extremal constructions, bounds and census."""

from .constructions import TerminalGraph, glue, named_graph, seymour
from .graph import (
    Graph,
    GraphFormatError,
    component_of,
    components,
    from_graph6,
    members,
    outer_neighborhood,
    to_graph6,
    vset,
)
from .separators import (
    SeparatorFamily,
    SeparatorInstance,
    count_minimal_separators,
    enumerate_minimal_separators,
    enumerate_minimal_separators_bruteforce,
    enumerate_minimal_vertex_cuts,
    is_minimal_separator,
    is_minimal_separator_full,
    is_separator,
    minimal_separators,
)

__version__ = "0.1.0"
