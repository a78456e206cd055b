import random

import networkx as nx
import pytest
from hypothesis import given, settings

from leakyforcing.graph import (Graph, GraphError, cartesian_product, complete_graph,
                                connected_components, cycle_graph, delete_edge, delete_vertex,
                                emit_edge_list, emit_graph6, empty_graph, from_edge_list, is_cycle,
                                is_path, is_tree, members, parse_edge_list, parse_graph6,
                                path_graph, vset)
from strategies import graphs


def test_vertex_set_helpers():
    assert vset([0, 3, 5]) == 0b101001
    assert members(0b101001) == [0, 3, 5]
    assert members(0) == []


def test_from_edge_list_examples():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert p3.edges() == [(0, 1), (1, 2)]
    k1 = from_edge_list(1, [])
    assert k1.degree(0) == 0
    c4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degrees() == [2, 2, 2, 2]


def test_from_edge_list_duplicates_are_idempotent():
    assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]) == from_edge_list(3, [(0, 1)])


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        from_edge_list(3, edges)


def test_width_limit_and_override():
    with pytest.raises(GraphError):
        from_edge_list(65, [])
    assert from_edge_list(65, [], width=65).n == 65


@given(graphs(max_n=9))
def test_constructed_graphs_are_simple(g):
    g.check()
    assert all(g.degree(v) == bin(g.adj[v]).count("1") for v in range(g.n))


def test_check_catches_asymmetry_and_loops():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0)).check()
    with pytest.raises(GraphError):
        Graph(1, (0b1,)).check()


def test_graph6_small_cases():
    k2 = parse_graph6("A_")
    assert k2.n == 2 and k2.edges() == [(0, 1)]
    assert emit_graph6(empty_graph(0)) == "?"
    assert emit_graph6(complete_graph(4)) == "C~"


def test_graph6_matches_networkx_decoder():
    g = parse_graph6("D?{")
    ref = nx.from_graph6_bytes(b"D?{")
    assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(2, 12)
        ref = nx.gnp_random_graph(n, 0.4, seed=rng.randrange(10**6))
        line = nx.to_graph6_bytes(ref, header=False).decode().strip()
        g = parse_graph6(line)
        assert sorted(g.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())
        assert emit_graph6(g) == line


def test_graph6_round_trip_corpus():
    rng = random.Random(5)
    lines = []
    for _ in range(100):
        n = rng.randint(1, 20)
        g = from_edge_list(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.3])
        lines.append(emit_graph6(g))
    for line in lines:
        assert emit_graph6(parse_graph6(line)) == line


@given(graphs(max_n=10))
def test_graph6_parse_inverts_emit(g):
    assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("line", ["", "A", "A__", "B\x20", "A`", "~~"])
def test_graph6_rejects_malformed(line):
    with pytest.raises(GraphError):
        parse_graph6(line)


def test_edge_list_round_trip_and_comments():
    text = "# a path\n3 2\n0 1  # first\n1 2\n"
    g = parse_edge_list(text)
    assert g == path_graph(3)
    assert parse_edge_list(emit_edge_list(g)) == g
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 x\n")


def test_delete_examples():
    c4 = cycle_graph(4)
    for e in c4.edges():
        assert is_path(delete_edge(c4, e))
    star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    h, index = delete_vertex(star, 0)
    assert h.num_edges() == 0 and h.n == 3
    assert index == {1: 0, 2: 1, 3: 2}
    from leakyforcing.families import spider
    h, _ = delete_vertex(spider(3, 3), 0)
    assert len(connected_components(h)) == 3


def test_delete_errors_and_originals_untouched():
    c4 = cycle_graph(4)
    with pytest.raises(GraphError):
        delete_edge(c4, (0, 2))
    with pytest.raises(GraphError):
        delete_vertex(c4, 4)
    delete_edge(c4, (0, 1))
    assert c4.num_edges() == 4


@given(graphs(min_n=1, max_n=8))
def test_delete_vertex_counts(g):
    for v in range(g.n):
        h, index = delete_vertex(g, v)
        assert h.n == g.n - 1
        assert h.num_edges() == g.num_edges() - g.degree(v)
        for a, b in h.edges():
            old = {new: old for old, new in index.items()}
            assert g.has_edge(old[a], old[b])


def test_cartesian_product_examples():
    c4 = cartesian_product(path_graph(2), path_graph(2))
    assert is_cycle(c4)
    prism = cartesian_product(complete_graph(3), complete_graph(2))
    assert prism.n == 6 and prism.num_edges() == 9 and set(prism.degrees()) == {3}
    grid = cartesian_product(path_graph(4), path_graph(5))
    assert (grid.n, grid.num_edges()) == (20, 31)
    assert grid.label(0) == "(0,0)"


@settings(max_examples=40)
@given(graphs(max_n=5), graphs(max_n=5))
def test_cartesian_product_counts(g, h):
    p = cartesian_product(g, h)
    p.check()
    assert p.n == g.n * h.n
    assert p.num_edges() == g.n * h.num_edges() + h.n * g.num_edges()


def test_cartesian_product_width():
    with pytest.raises(GraphError):
        cartesian_product(path_graph(9), path_graph(9))
    assert cartesian_product(path_graph(9), path_graph(9), width=81).n == 81


def test_shape_predicates():
    assert is_path(path_graph(5)) and not is_cycle(path_graph(5))
    assert is_cycle(cycle_graph(5)) and not is_path(cycle_graph(5))
    prism = cartesian_product(complete_graph(3), complete_graph(2))
    assert not is_path(prism) and not is_cycle(prism)
    assert len(connected_components(prism)) == 1
    assert is_tree(path_graph(4)) and not is_tree(cycle_graph(4))
    assert is_path(path_graph(1)) and is_path(path_graph(2))
    assert not is_path(empty_graph(2))


@given(graphs(max_n=8))
def test_components_match_networkx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges())
    ours = sorted(tuple(members(c)) for c in connected_components(g))
    theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(ref))
    assert ours == theirs
    assert is_tree(g) == (g.n >= 1 and nx.is_tree(ref))
