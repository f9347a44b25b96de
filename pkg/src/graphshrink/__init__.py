"""All-pairs shortest paths on sparse undirected graphs via graph contraction."""

from .assembly import assemble, restore_vertex
from .baseline import apsp_dijkstra, floyd_warshall
from .disassembly import (
    UNBOUNDED,
    RemovalRecord,
    ShrinkSequence,
    SolveParams,
    best_alternative_two_hop,
    disassemble,
    edge_delta,
    remove_and_preserve,
    shortcut_weight,
)
from .dimacs import DimacsError, parse_dimacs, write_dimacs
from .graph import INF, Graph, GraphError, GraphStats, extract_connected_subgraph
from .matrices import UNSET, DistanceMatrix, PrecedenceMatrix
from .microsolve import dijkstra, solve_residual
from .paths import PathError, path_weight, reconstruct_path
from .solver import SolveResult, solve

__all__ = [
    "INF",
    "UNBOUNDED",
    "UNSET",
    "DimacsError",
    "DistanceMatrix",
    "Graph",
    "GraphError",
    "GraphStats",
    "PathError",
    "PrecedenceMatrix",
    "RemovalRecord",
    "ShrinkSequence",
    "SolveParams",
    "SolveResult",
    "apsp_dijkstra",
    "assemble",
    "best_alternative_two_hop",
    "dijkstra",
    "disassemble",
    "edge_delta",
    "extract_connected_subgraph",
    "floyd_warshall",
    "parse_dimacs",
    "path_weight",
    "reconstruct_path",
    "remove_and_preserve",
    "restore_vertex",
    "shortcut_weight",
    "solve",
    "solve_residual",
    "write_dimacs",
]
