"""Exact solver and verification toolkit for domination games on small graphs."""

from .cuts import CutSet, bridges, edge_connectivity, minimal_edge_cuts, remove_cut
from .engine import (
    DOMINATOR,
    D_GAME,
    S_GAME,
    STALLER,
    GameValue,
    GameVariant,
    Move,
    Solver,
    TraceError,
    double_staller_value,
    game_value,
    is_double_staller,
    legal_moves,
    replay,
    solve,
    staller_pass_game,
)
from .families import (
    LabeledGraph,
    build,
    clique_join,
    complete,
    cycle,
    disjoint_union,
    joined_copies,
    path,
    spider,
    star,
)
from .generate import (
    canonical_graph,
    enumerate_connected_graphs,
    random_connected_graph,
)
from .graphs import (
    DEFAULT_MAX_VERTICES,
    EdgeListError,
    Graph,
    parse_edge_list,
    residual_graph,
    serialize_edge_list,
    vertex_set,
    vertices,
)

__version__ = "0.1.0"

__all__ = [
    "CutSet",
    "DEFAULT_MAX_VERTICES",
    "DOMINATOR",
    "D_GAME",
    "EdgeListError",
    "GameValue",
    "GameVariant",
    "Graph",
    "LabeledGraph",
    "Move",
    "S_GAME",
    "STALLER",
    "Solver",
    "TraceError",
    "bridges",
    "build",
    "canonical_graph",
    "clique_join",
    "complete",
    "cycle",
    "disjoint_union",
    "double_staller_value",
    "edge_connectivity",
    "enumerate_connected_graphs",
    "game_value",
    "is_double_staller",
    "joined_copies",
    "legal_moves",
    "minimal_edge_cuts",
    "parse_edge_list",
    "path",
    "random_connected_graph",
    "remove_cut",
    "replay",
    "residual_graph",
    "serialize_edge_list",
    "solve",
    "spider",
    "staller_pass_game",
    "star",
    "vertex_set",
    "vertices",
]
