from functools import lru_cache

import pytest
from hypothesis import given, settings

from coverideal import (
    Budget,
    BudgetExceeded,
    CertificateError,
    Graph,
    VDCertificate,
    g_k,
    is_vertex_decomposable,
    maximal_independent_sets,
    seq_cm_proxy,
    validate_vertex_decomposition,
)
from coverideal.complex import maximal_sets
from coverideal.errors import FormatError
from coverideal.graph import bits
from coverideal.verify import load_instance

from conftest import graphs


def cycle(n):
    labels = [f"x{i}" for i in range(1, n + 1)]
    return Graph.from_edges(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def vd_by_complex_definition(g) -> bool:
    """Vertex decomposability of the independence complex, straight from facets."""

    @lru_cache(maxsize=None)
    def vd(facets):
        if len(facets) <= 1:
            return True
        verts = 0
        for f in facets:
            verts |= f
        for v in bits(verts):
            link = tuple(maximal_sets(f & ~(1 << v) for f in facets if f >> v & 1))
            dele = tuple(maximal_sets(f & ~(1 << v) for f in facets))
            if set(link) & set(dele):
                continue
            if vd(link) and vd(dele):
                return True
        return False

    return vd(tuple(maximal_independent_sets(g)))


def test_edgeless_graph_is_a_leaf():
    cert = is_vertex_decomposable(Graph.from_edges(["a", "b"]))
    assert cert.certified and cert.tree.is_leaf
    assert validate_vertex_decomposition(cert)


@pytest.mark.parametrize("n, expected", [(3, True), (4, False), (5, True), (6, False), (7, False)])
def test_cycles(n, expected):
    cert = is_vertex_decomposable(cycle(n))
    assert cert.certified == expected
    assert validate_vertex_decomposition(cert)


def test_square_with_two_triangles():
    g = load_instance("square_two_triangles")
    assert is_vertex_decomposable(g).certified
    assert seq_cm_proxy(g)
    g2 = g_k(g, 2)
    assert is_vertex_decomposable(g2).refuted
    assert not seq_cm_proxy(g2, 2) and not seq_cm_proxy(g2, 3)


def test_whiskered_kite_is_vertex_decomposable():
    assert is_vertex_decomposable(load_instance("whiskered_kite")).certified


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        is_vertex_decomposable(g_k(load_instance("square_two_triangles"), 2), Budget(nodes=5))


@given(graphs(max_n=6))
def test_search_matches_complex_definition(g):
    assert is_vertex_decomposable(g).certified == vd_by_complex_definition(g)


@settings(max_examples=40)
@given(graphs(max_n=7))
def test_certificates_roundtrip_and_revalidate(g):
    cert = is_vertex_decomposable(g)
    back = VDCertificate.from_json(cert.to_json())
    assert back.refuted == cert.refuted
    assert validate_vertex_decomposition(back)
    if cert.certified:
        # vertex decomposable implies sequentially Cohen-Macaulay
        assert seq_cm_proxy(g)


def test_tampered_certificates(c4):
    path = Graph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")])
    data = is_vertex_decomposable(path).to_json()
    root = data["nodes"][data["root"]]
    assert root["vertex"] == "b"
    # a is not a shedding vertex of the path, and the subtrees no longer fit
    root["vertex"] = "a"
    with pytest.raises(CertificateError):
        VDCertificate.from_json(data)
    forged = {"type": "vertex-decomposition", "graph": {"vertices": ["x1", "x2", "x3", "x4"],
              "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]]},
              "root": 2, "nodes": [{"leaf": ["x2", "x3", "x4"]}, {"leaf": ["x3"]},
                                   {"vertex": "x1", "delete": 0, "link": 1}]}
    # well formed, but the leaf G - x1 still has edges
    assert not validate_vertex_decomposition(VDCertificate.from_json(forged))
    forged["nodes"][0] = {"leaf": ["x2", "x4"]}
    with pytest.raises(CertificateError):
        VDCertificate.from_json(forged)
    with pytest.raises(FormatError):
        VDCertificate.from_json({"type": "linear-quotients"})


def test_non_shedding_tree_fails_validation(c4):
    # a structurally consistent tree through a non-shedding vertex
    mask_all = c4.full
    from coverideal.decomposable import VDNode

    x1 = 0
    dele = mask_all & ~1
    link = mask_all & ~(c4.adj[x1] | 1)
    inner = VDNode(dele, 2, VDNode(dele & ~(1 << 2)), VDNode(dele & ~(c4.adj[2] | 1 << 2)))
    tree = VDNode(mask_all, x1, inner, VDNode(link))
    assert not validate_vertex_decomposition(VDCertificate(c4, tree))
