import itertools

import networkx as nx
import pytest
from hypothesis import given

from coverideal import (
    Graph,
    GraphError,
    InvalidVertexError,
    closed_neighbors,
    connected_components,
    disjoint_union,
    graph_isomorphic,
    induced_delete,
    induced_matching_number,
    is_cameron_walker,
    is_clique,
    is_independent,
    is_shedding,
    is_simplicial,
    matching_number,
    maximal_independent_sets,
    minimal_vertex_covers,
)
from coverideal.decomposable import shedding_by_definition
from coverideal.errors import FormatError
from coverideal.graph import bits, format_edge_list, from_json, parse_edge_list, to_json

from conftest import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.labels)
    h.add_edges_from(g.edge_labels())
    return h


def test_from_edges_appends_unknown_endpoints():
    g = Graph.from_edges(["a"], [("a", "b"), ("b", "c")])
    assert g.labels == ("a", "b", "c")
    assert g.num_edges == 2
    assert g.degree("b") == 2


def test_bad_graphs_rejected():
    with pytest.raises(GraphError):
        Graph(("a", "a"), (0, 0))
    with pytest.raises(GraphError):
        Graph(("a", "b"), (0b10, 0))
    with pytest.raises(GraphError):
        Graph.from_edges(["a"], [("a", "a")])
    with pytest.raises(InvalidVertexError):
        Graph.from_edges(["a", "b"]).index("z")


def test_small_predicates(c4):
    assert is_independent(c4, ["x1", "x3"])
    assert not is_independent(c4, ["x1", "x2"])
    assert is_clique(c4, ["x1", "x2"])
    assert not is_simplicial(c4, "x1")
    assert c4.labels_of(closed_neighbors(c4, ["x1"])) == ["x1", "x2", "x4"]
    # no vertex of a 4-cycle is shedding
    assert not any(is_shedding(c4, v) for v in c4.labels)


def test_induced_delete_ignores_foreign_labels(c4):
    h = induced_delete(c4, ["x1", "nope"])
    assert h.labels == ("x2", "x3", "x4")
    assert h.num_edges == 2


def test_c4_covers(c4):
    assert [c4.labels_of(c) for c in minimal_vertex_covers(c4)] == [["x1", "x3"], ["x2", "x4"]]


@given(graphs(max_n=8))
def test_mis_match_networkx(g):
    ours = {frozenset(g.labels_of(m)) for m in maximal_independent_sets(g)}
    theirs = {frozenset(c) for c in nx.find_cliques(nx.complement(to_nx(g)))} if g.n else {frozenset()}
    assert ours == theirs


@given(graphs(max_n=7))
def test_covers_are_minimal_transversals(g):
    covers = minimal_vertex_covers(g)
    brute = []
    for r in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            s = sum(1 << i for i in combo)
            if all(s >> i & 1 or s >> j & 1 for i, j in g.edges()):
                if not any(c & ~s == 0 for c in brute):
                    brute.append(s)
    assert sorted(covers) == sorted(brute)


@given(graphs(max_n=7))
def test_matching_numbers(g):
    assert matching_number(g) == len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    # induced matchings by brute force
    edges = g.edges()
    best = 0
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            touched = 0
            for i, j in combo:
                touched |= 1 << i | 1 << j
            if bin(touched).count("1") == 2 * r and all(bin(g.adj[i] & touched).count("1") == 1 for e in combo for i in e):
                best = max(best, r)
    assert induced_matching_number(g) == best


def test_cameron_walker_examples(c4):
    assert not is_cameron_walker(c4)
    star = Graph.from_edges(["c"], [("c", "a"), ("c", "b")])
    assert is_cameron_walker(star)


@given(graphs(max_n=7))
def test_shedding_restatement(g):
    for v in range(g.n):
        assert is_shedding(g, v) == shedding_by_definition(g.adj, g.full, v)


def test_every_small_graph_exhaustively():
    # all labeled graphs on at most 5 vertices: covers complement the maximal
    # independent sets, and the shedding restatement agrees with the definition
    for n in range(1, 6):
        labels = [f"x{i}" for i in range(1, n + 1)]
        pairs = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]
        for chosen in range(1 << len(pairs)):
            g = Graph.from_edges(labels, [e for t, e in enumerate(pairs) if chosen >> t & 1])
            assert sorted(g.full & ~m for m in maximal_independent_sets(g)) == sorted(minimal_vertex_covers(g))
            for v in range(n):
                assert is_shedding(g, v) == shedding_by_definition(g.adj, g.full, v)


@given(graphs(max_n=7))
def test_neighbors_of_simplicial_vertices_shed(g):
    for v in range(g.n):
        if is_simplicial(g, v):
            assert all(is_shedding(g, w) for w in bits(g.adj[v]))


@given(graphs(max_n=8))
def test_components_match_networkx(g):
    ours = sorted(sorted(h.labels) for h in connected_components(g))
    assert ours == sorted(sorted(c) for c in nx.connected_components(to_nx(g)))


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_matches_networkx(g, h):
    iso = graph_isomorphic(g, h)
    assert (iso is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))
    if iso is not None:
        assert {frozenset(iso[x] for x in e) for e in g.edge_labels()} == h.edge_set()


def test_disjoint_union_prefixes(c4):
    u = disjoint_union([c4, c4])
    assert u.n == 8 and u.num_edges == 8
    assert "g1.x3" in u


@given(graphs())
def test_json_and_edge_list_roundtrip(g):
    assert from_json(to_json(g)) == g
    assert parse_edge_list(format_edge_list(g)).same_as(g)


def test_json_errors():
    with pytest.raises(FormatError):
        from_json({"vertices": ["a"], "edges": [["a", "b"]]})
    with pytest.raises(FormatError):
        from_json({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})
    with pytest.raises(FormatError):
        from_json([1, 2])
    with pytest.raises(FormatError):
        parse_edge_list("a b c\n")
