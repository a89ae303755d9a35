from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpreclusion.constructions import complete, cycle, empty, path, star
from mpreclusion.graph import (
    Graph,
    GraphInputError,
    complement,
    degree_stats,
    delete_edges,
    delete_vertices,
    disjoint_union,
    from_edgelist,
    from_graph6,
    induced,
    join,
    make_graph,
    to_edgelist,
    to_graph6,
)


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, c in zip(pairs, chosen) if c])


def test_make_graph_triangle_is_complete():
    assert make_graph(3, [(0, 1), (1, 2), (0, 2)]) == complete(3)


def test_make_graph_without_edges():
    g = make_graph(2, [])
    assert g.m == 0 and g.n == 2


def test_path_degree_sequence():
    g = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert g.degrees() == [1, 2, 2, 2, 1]
    assert g == path(5)


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(0, 1), (1, 0)], [(-1, 0)]])
def test_make_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphInputError):
        make_graph(3, edges)


def test_complement_examples():
    assert complement(complete(4)) == empty(4)
    c5 = cycle(5)
    assert nx.is_isomorphic(nx.Graph(complement(c5).edges()), nx.Graph(c5.edges()))
    claw = complement(star(4))
    assert sorted(claw.edges()) == [(1, 2), (1, 3), (2, 3)] and claw.degree(0) == 0


def test_deletion_and_induced_examples():
    assert delete_edges(complete(3), [(0, 1)]) == make_graph(3, [(0, 2), (1, 2)])
    assert delete_vertices(complete(4), [3]).graph == complete(3)
    sub = induced(cycle(5), [0, 1, 2])
    assert sub.graph == path(3) and sub.old_of_new == (0, 1, 2)


def test_deletion_rejects_missing_edge_or_vertex():
    with pytest.raises(GraphInputError):
        delete_edges(path(3), [(0, 2)])
    with pytest.raises(GraphInputError):
        delete_vertices(path(3), [5])


def test_join_examples():
    assert join(complete(1), complete(1)) == complete(2)
    c4 = join(empty(2), empty(2))
    assert c4.m == 4 and c4.degrees() == [2, 2, 2, 2]
    g = join(complete(1), disjoint_union(complete(2), complete(1)))
    assert sorted(g.degrees(), reverse=True) == [3, 2, 2, 1]


def test_degree_stats_examples():
    for n in range(2, 9):
        s = degree_stats(complete(n))
        assert (s.delta, s.Delta, s.xi) == (n - 1, n - 1, 2 * n - 4)
    assert tuple(degree_stats(path(5))) == (1, 2, 1)
    assert tuple(degree_stats(cycle(6))) == (2, 2, 2)


def test_degree_stats_edgeless_has_no_xi():
    s = degree_stats(empty(4))
    assert s.xi is None and s.delta == 0


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_complement_is_an_involution(g):
    h = complement(g)
    assert complement(h) == g
    assert g.m + h.m == g.n * (g.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(6), graphs(6))
def test_join_and_union_edge_counts(g, h):
    assert disjoint_union(g, h).m == g.m + h.m
    assert join(g, h).m == g.m + h.m + g.n * h.n


@settings(max_examples=100, deadline=None)
@given(graphs(), st.data())
def test_deleting_edges_commutes_with_complement(g, data):
    if not g.m:
        return
    X = data.draw(st.lists(st.sampled_from(g.edges()), unique=True))
    lhs = complement(delete_edges(g, X))
    rhs = complement(g)
    for e in X:
        assert lhs.has_edge(*e) and not rhs.has_edge(*e)
    assert lhs.m == rhs.m + len(X)


@settings(max_examples=300, deadline=None)
@given(graphs(12))
def test_graph6_round_trip_matches_networkx(g):
    text = to_graph6(g)
    assert from_graph6(text) == g
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(h, nodes=list(range(g.n)), header=False).decode().strip()
    assert text == ref


def test_graph6_large_order_header():
    g = path(64)
    assert from_graph6(to_graph6(g)) == g


def test_graph6_known_encodings():
    assert to_graph6(complete(4)) == "C~"
    assert from_graph6("Bw") == complete(3)


def test_graph6_errors_name_position():
    with pytest.raises(GraphInputError, match="line 3"):
        from_graph6("C~~", line=3)
    with pytest.raises(GraphInputError, match="byte"):
        from_graph6("C\x01")
    with pytest.raises(GraphInputError):
        from_graph6("")


@settings(max_examples=100, deadline=None)
@given(graphs(10))
def test_edgelist_round_trip(g):
    assert from_edgelist(to_edgelist(g)) == g


def test_edgelist_errors_name_line():
    with pytest.raises(GraphInputError, match="line 2"):
        from_edgelist("3 1\n0 x\n")
    with pytest.raises(GraphInputError):
        from_edgelist("3 1\n0 0\n")


def test_mask_round_trip_and_order():
    g = make_graph(4, [(0, 1), (2, 3)])
    assert Graph.from_mask(4, g.to_mask()) == g
    # mask order and graph6 order agree
    masks = range(1 << 6)
    texts = [to_graph6(Graph.from_mask(4, x)) for x in masks]
    assert texts == sorted(texts)
