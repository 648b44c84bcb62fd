"""Graph representation, edge-list text format, residual reduction."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domgame.engine import D_GAME, S_GAME, Solver
from domgame.graphs import (
    EdgeListError,
    Graph,
    iter_bits,
    mask_connected,
    parse_edge_list,
    residual_graph,
    serialize_edge_list,
    vertex_set,
    vertices,
)


def small_graphs(max_n=6):
    """Strategy: a connected-or-not simple graph as (n, edge subset)."""

    def make(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        return Graph.from_edges(n, edges)

    return st.composite(make)()


def test_from_edges_basics():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count == 3
    assert g.degree(0) == 1 and g.degree(1) == 2
    assert g.adjacency(1) == vertex_set([0, 2])
    assert g.closed_neighborhood(1) == vertex_set([0, 1, 2])
    assert g.is_connected()


def test_from_edges_duplicates_collapse():
    g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edge_count == 1


def test_from_edges_rejects_bad_edges():
    with pytest.raises(ValueError, match="self-loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="outside"):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError, match="cap"):
        Graph.from_edges(30, [])


def test_graph_validates_masks():
    # closed[v] must contain v
    with pytest.raises(ValueError, match="missing vertex"):
        Graph(2, (0b01, 0b01))
    # symmetry
    with pytest.raises(ValueError, match="symmetric"):
        Graph(2, (0b11, 0b10))
    # stray high bits
    with pytest.raises(ValueError, match="outside"):
        Graph(1, (0b11,))


def test_vertex_helpers_round_trip():
    assert vertices(vertex_set([0, 3, 5])) == [0, 3, 5]
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert vertices(0) == []


@given(st.lists(st.integers(min_value=0, max_value=40), unique=True))
def test_vertex_set_round_trip(vs):
    assert vertices(vertex_set(vs)) == sorted(vs)


def test_connectivity():
    assert Graph.from_edges(1, []).is_connected()
    assert Graph.from_edges(3, [(0, 1), (1, 2)]).is_connected()
    assert not Graph.from_edges(3, [(0, 1)]).is_connected()
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert mask_connected(g.closed, vertex_set([0, 1]))
    assert mask_connected(g.closed, vertex_set([2, 3]))
    assert not mask_connected(g.closed, g.full_mask)
    assert mask_connected(g.closed, 0)


def test_edge_list_round_trip():
    g = Graph.from_edges(5, [(0, 1), (0, 4), (2, 3)])
    text = serialize_edge_list(g)
    assert text == "5 3\n0 1\n0 4\n2 3\n"
    assert parse_edge_list(text) == g


def test_edge_list_accepts_trailing_blanks():
    assert parse_edge_list("3 2\n0 1\n1 2").edges == [(0, 1), (1, 2)]
    assert parse_edge_list("3 2\n0 1\n1 2\n\n  \n").edges == [(0, 1), (1, 2)]
    assert parse_edge_list("1 0\n").n == 1


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("", 1),
        ("3\n", 1),
        ("x y\n", 1),
        ("-1 0\n", 1),
        ("99 0\n", 1),
        ("3 2\n0 1\n", 3),
        ("3 2\n0 1\nz z\n", 3),
        ("2 1\n0 0\n", 2),
        ("2 1\n0 5\n", 2),
        ("3 2\n0 1\n1 2\n0 2\n", 4),
    ],
)
def test_edge_list_errors_name_the_line(text, lineno):
    with pytest.raises(EdgeListError, match=f"line {lineno}"):
        parse_edge_list(text)


@given(small_graphs())
def test_serialize_parse_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


def test_residual_drops_settled_vertices():
    # path 0-1-2-3 with {0,1,2} dominated: vertices 0 and 1 have their whole
    # closed neighborhoods settled and disappear, as do the edges 0-1 and 1-2
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    reduced, keep = residual_graph(g, vertex_set([0, 1, 2]))
    assert keep == (2, 3)
    assert reduced.edges == [(0, 1)]


def test_residual_of_nothing_is_identity():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    reduced, keep = residual_graph(g, 0)
    assert reduced == g
    assert keep == (0, 1, 2, 3)


def test_residual_of_everything_is_empty():
    g = Graph.from_edges(2, [(0, 1)])
    reduced, keep = residual_graph(g, g.full_mask)
    assert reduced.n == 0 and keep == ()


def test_residual_rejects_stray_bits():
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        residual_graph(g, 0b100)


def remap_mask(mask, keep):
    out = 0
    for new, old in enumerate(keep):
        if mask >> old & 1:
            out |= 1 << new
    return out


@given(small_graphs(max_n=5), st.integers(min_value=0, max_value=(1 << 5) - 1))
def test_residual_preserves_game_values(g, raw):
    dominated = raw & g.full_mask
    reduced, keep = residual_graph(g, dominated)
    sub = remap_mask(dominated, keep)
    for variant in (D_GAME, S_GAME):
        assert Solver(g).value(variant, dominated) == Solver(reduced).value(variant, sub)


@given(small_graphs(max_n=5), st.integers(min_value=0, max_value=(1 << 5) - 1))
def test_residual_is_idempotent(g, raw):
    dominated = raw & g.full_mask
    reduced, keep = residual_graph(g, dominated)
    again, keep2 = residual_graph(reduced, remap_mask(dominated, keep))
    assert again == reduced
    assert keep2 == tuple(range(reduced.n))
