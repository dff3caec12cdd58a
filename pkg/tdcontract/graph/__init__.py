"""
Graph representation, operations, pattern search and generators.
"""
# flake8: noqa F401
from .edge_list import format_edge_list, parse_edge_list, read_graph, write_graph
from .generators import (
    complete,
    cycle,
    empty,
    join,
    linear_forest,
    path,
    random_connected,
    star,
    union,
)
from .graph import Edge, Graph, VertexSet
from .operations import Contraction, contract_edge, distance, girth, k_subdivide
from .patterns import claw, contains_induced, find_induced, is_h_free, p4_plus_kp3

__all__ = (
    "Contraction",
    "Edge",
    "Graph",
    "VertexSet",
    "claw",
    "complete",
    "contains_induced",
    "contract_edge",
    "cycle",
    "distance",
    "empty",
    "find_induced",
    "format_edge_list",
    "girth",
    "is_h_free",
    "join",
    "k_subdivide",
    "linear_forest",
    "p4_plus_kp3",
    "parse_edge_list",
    "path",
    "random_connected",
    "read_graph",
    "star",
    "union",
    "write_graph",
)
