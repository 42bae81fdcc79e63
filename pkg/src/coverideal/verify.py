"""Executable checks of the structural results on desk-scale instances.

Each check returns a :class:`CheckResult`. Random instances come from seeded
generators so every run sees the same graphs.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from ._budget import DEFAULT_NODES, DEFAULT_SECONDS, Budget
from .betti import betti_table, betti_table_hochster, componentwise_linear_witness, regularity
from .constructions import (
    CliquePartition,
    StarCompleteSpec,
    add_whiskers,
    attach_sizes,
    clique_whisker,
    from_family_spec,
    g_k,
    layer_vertices,
    star_complete,
    cameron_walker,
)
from .decomposable import (
    is_vertex_decomposable,
    seq_cm_proxy,
    shedding_by_definition,
    validate_vertex_decomposition,
)
from .graph import (
    Graph,
    bits,
    closed_neighbors,
    from_json as graph_from_json,
    graph_isomorphic,
    induced_delete,
    induced_matching_number,
    is_independent,
    is_shedding,
    is_simplicial,
    matching_number,
    maximal_independent_sets,
    minimal_vertex_covers,
    disjoint_union,
)
from .ideal import (
    MonomialIdeal,
    colon_by_monomial,
    cover_ideal,
    deg_max,
    divides,
    from_strings,
    in_ring,
    intersect,
    multiply,
    polarize,
    power,
    sum_ideals,
    symbolic_power_cover,
)
from .quotients import (
    betti_from_linear_quotients,
    linear_quotients_order,
    validate_linear_quotients,
)

log = logging.getLogger(__name__)

SEED = 20240611


def load_instance(name: str) -> Graph:
    """Load a bundled graph (``<name>.json``) or family spec (``<name>.family.json``)."""
    data = json.loads(resources.files("coverideal.instances").joinpath(f"{name}.json").read_text())
    if "family" in data:
        return from_family_spec(data)
    return graph_from_json(data)


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool = True
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    cases: int = 0
    seconds: float = 0.0

    def expect(self, ok: bool, message: str):
        self.cases += 1
        if not ok:
            self.passed = False
            self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "title": self.title,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures[:20],
            "details": self.details,
            "seconds": round(self.seconds, 3),
        }


# -- instance generators -----------------------------------------------------


def random_graph(rng: random.Random, n: int, density: float = 0.5, min_edges: int = 1) -> Graph:
    labels = [f"x{i}" for i in range(1, n + 1)]
    while True:
        edges = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:] if rng.random() < density]
        if len(edges) >= min_edges or n < 2:
            return Graph.from_edges(labels, edges)


def random_clique_partition(rng: random.Random, g: Graph, empty_parts: bool = False) -> CliquePartition:
    parts = []
    order = list(g.labels)
    rng.shuffle(order)
    for v in order:
        fits = [p for p in parts if all(g.adj[g.index(v)] >> g.index(u) & 1 for u in p)]
        if fits and rng.random() < 0.7:
            rng.choice(fits).append(v)
        else:
            parts.append([v])
    if empty_parts and rng.random() < 0.3:
        parts.append([])
    return CliquePartition.of(parts)


def whiskered_cover_instances(count: int = 20, seed: int = SEED) -> list:
    """``G ∪ W(S)`` for random ``G`` and a random minimal vertex cover ``S``."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        g = random_graph(rng, rng.randint(2, 5))
        covers = minimal_vertex_covers(g)
        s = rng.choice(covers)
        out.append((f"whisker#{t} n={g.n} S={g.labels_of(s)}", add_whiskers(g, s)))
    return out


def clique_whisker_instances(count: int = 20, seed: int = SEED + 1) -> list:
    rng = random.Random(seed)
    out = []
    for t in range(count):
        g = random_graph(rng, rng.randint(1, 5), min_edges=0)
        pi = random_clique_partition(rng, g, empty_parts=True)
        out.append((f"clique-whisker#{t} parts={[list(p) for p in pi.parts]}", g, pi, clique_whisker(g, pi)))
    return out


def _path(n: int, prefix: str = "x") -> Graph:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph.from_edges(labels, list(zip(labels, labels[1:])))


def cameron_walker_instances() -> list:
    """One or more members of every connected Cameron-Walker shape."""
    star = star_complete(StarCompleteSpec("c", [2, 2, 2]))
    star_triangle = star_complete(StarCompleteSpec("c", [3, 3]))
    k2 = (["a"], ["b"], [("a", "b")])
    p4 = (["a1", "a2"], ["b1", "b2"], [("a1", "b1"), ("b1", "a2"), ("a2", "b2")])
    return [
        ("star K_{1,3}", star),
        ("star triangle", star_triangle),
        ("K2 base, leaf", cameron_walker(*k2, {"a": 1})),
        ("K2 base, two leaves, triangle", cameron_walker(*k2, {"a": 2}, {"b": 1})),
        ("P4 base, leaves", cameron_walker(*p4, {"a1": 1, "a2": 1})),
        ("P4 base, leaves, triangles", cameron_walker(*p4, {"a1": 1, "a2": 1}, {"b1": 1, "b2": 1})),
    ]


def pure_attachment_instances(count: int = 8, seed: int = SEED + 2) -> list:
    """Pure star completes at all but at most one host vertex."""
    rng = random.Random(seed)
    out = []
    for t in range(count):
        host = random_graph(rng, rng.randint(1, 3), min_edges=0)
        chosen = list(host.labels)
        if len(chosen) > 1 and rng.random() < 0.5:
            chosen.remove(rng.choice(chosen))
        sizes = {x: rng.choice([[3], [4], [3, 3]]) for x in chosen}
        out.append((f"pure#{t} host={host.edge_labels()} stars={sizes}", attach_sizes(host, sizes)))
    return out


def mixed_attachment_instances(count: int = 8, seed: int = SEED + 3) -> list:
    """Non-pure star completes on a set whose complement is independent,
    pure ones on some of the rest."""
    rng = random.Random(seed)
    out = [("triangle with pendant pairs", load_instance("triangle_pendant_pairs"))]
    for t in range(count):
        host = random_graph(rng, rng.randint(1, 4), min_edges=0)
        indep = rng.choice(maximal_independent_sets(host))
        rest = [x for x in host.labels if not host.mask([x]) & indep]
        sizes = {x: rng.choice([[2], [2, 2], [2, 3]]) for x in rest}
        for x in host.labels_of(indep):
            if rng.random() < 0.4:
                sizes[x] = [3]
        out.append((f"mixed#{t} host={host.edge_labels()} stars={sizes}", attach_sizes(host, sizes)))
    return out


def bipartite_attachment_instances() -> list:
    """Bipartite graphs with stars on a set whose complement is independent."""
    c4 = Graph.from_edges(["x1", "x2", "x3", "x4"], [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")])
    return [
        ("P4 with leaves at x2,x3", attach_sizes(_path(4), {"x2": [2], "x3": [2]})),
        ("C4 with two leaves at x1,x3", attach_sizes(c4, {"x1": [2, 2], "x3": [2, 2]})),
        ("P3 with a leaf at x2", attach_sizes(_path(3), {"x2": [2]})),
        ("whiskered C4 cover", add_whiskers(c4, ["x1", "x3"])),
    ]


def random_bipartite(rng: random.Random, n: int) -> Graph:
    labels = [f"x{i}" for i in range(1, n + 1)]
    side = {v: rng.random() < 0.5 for v in labels}
    edges = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:] if side[u] != side[v] and rng.random() < 0.6]
    return Graph.from_edges(labels, edges)


# -- checks ------------------------------------------------------------------


def _lq(ideal: MonomialIdeal, budget: Budget):
    cert = linear_quotients_order(ideal, budget)
    return cert


def check_triangle_pendants(budget: Budget, fields=(2, 3)) -> CheckResult:
    res = CheckResult("triangle-pendants", "cover ideal of a triangle with pendant pairs; regularity jump 4 -> 9")
    g = load_instance("triangle_pendant_pairs")
    ring = g.labels
    expected_j = from_strings(ring, ["x1*x2*x3", "x2*x3*x4*x5", "x1*x3*x6*x7", "x1*x2*x8*x9"])
    j = cover_ideal(g)
    res.expect(j == expected_j, f"J(G) = {j}")
    j2 = symbolic_power_cover(g, 2)
    all_vars = MonomialIdeal(ring, (tuple([1] * len(ring)),))
    res.expect(j2 == sum_ideals(power(j, 2), all_vars), f"J(G)^(2) = {j2}")
    res.details["generators_J2"] = len(j2)
    for p in fields:
        r1, r2 = regularity(j, p), regularity(j2, p)
        res.details[f"reg_F{p}"] = [r1, r2]
        res.expect((r1, r2) == (4, 9), f"over F_{p}: reg pair {(r1, r2)}")
    family = load_instance("triangle_pendant_pairs.family")
    res.expect(graph_isomorphic(g, family) is not None, "family spec does not rebuild the graph")
    return res


def check_square_two_triangles(budget: Budget, fields=(2, 3)) -> CheckResult:
    res = CheckResult(
        "square-two-triangles",
        "4-cycle with two triangles: vertex decomposable, yet J^(2) lacks linear quotients",
    )
    g = load_instance("square_two_triangles")
    family = load_instance("square_two_triangles.family")
    res.expect(graph_isomorphic(g, family) is not None, "family spec does not rebuild the graph")
    vd = is_vertex_decomposable(g, budget)
    res.expect(vd.certified and validate_vertex_decomposition(vd), "G is not certified vertex decomposable")
    j2 = symbolic_power_cover(g, 2)
    lq = linear_quotients_order(polarize(j2)[0], budget)
    res.details["lq_search_nodes"] = lq.nodes
    res.expect(lq.refuted, "polarized J^(2) unexpectedly has linear quotients")
    for p in fields:
        d = componentwise_linear_witness(j2, p)
        res.details[f"J2_noncwl_degree_F{p}"] = d
        res.expect(d is not None, f"J^(2) componentwise linear over F_{p}")
        seqcm = seq_cm_proxy(g_k(g, 2), p)
        res.details[f"G2_seqcm_F{p}"] = seqcm
        res.expect(not seqcm, f"G_2 passes the sequentially CM proxy over F_{p}")
    kite = load_instance("whiskered_kite")
    kite_vd = is_vertex_decomposable(kite, budget)
    res.expect(kite_vd.certified, "whiskered kite not vertex decomposable")
    res.expect(linear_quotients_order(symbolic_power_cover(kite, 2), budget).refuted,
               "whiskered kite J^(2) unexpectedly has linear quotients")
    return res


def check_polarization_layered(budget: Budget, count: int = 50, seed: int = SEED + 4) -> CheckResult:
    res = CheckResult("polarization-layered", "polarized J(G)^(k) equals J(G_k)")
    rng = random.Random(seed)
    for t in range(count):
        g = random_graph(rng, rng.randint(1, 5), min_edges=0)
        for k in (1, 2, 3):
            gk = g_k(g, k)
            lhs = in_ring(polarize(symbolic_power_cover(g, k) if g.num_edges else MonomialIdeal.unit(g.labels))[0], gk.labels)
            res.expect(lhs == cover_ideal(gk), f"graph {g.edge_labels()} k={k}")
    return res


def check_simplicial_layers(budget: Budget, count: int = 40, seed: int = SEED + 5) -> CheckResult:
    res = CheckResult("simplicial-layers", "simplicial x_i gives simplicial x_{i,k}; x_{l,1} shedding")
    rng = random.Random(seed)
    for t in range(count):
        g = random_graph(rng, rng.randint(2, 6))
        for k in range(1, 5):
            gk = g_k(g, k)
            for i in range(g.n):
                if not is_simplicial(g, i):
                    continue
                res.expect(is_simplicial(gk, i * k + k - 1), f"{g.edge_labels()} x={g.labels[i]} k={k}")
                for l in bits(g.adj[i]):
                    res.expect(is_shedding(gk, l * k), f"{g.edge_labels()} neighbor {g.labels[l]} k={k}")
    return res


def check_layer_deletions(budget: Budget, count: int = 30, seed: int = SEED + 6) -> CheckResult:
    res = CheckResult("layer-deletions", "deleting layers and neighborhoods of G_k")
    rng = random.Random(seed)
    for t in range(count):
        g = random_graph(rng, rng.randint(2, 5), min_edges=0)
        for k in (2, 3):
            gk = g_k(g, k)
            u = [x for x in g.labels if rng.random() < 0.4]
            res.expect(
                induced_delete(gk, layer_vertices(g, k, u)) == g_k(induced_delete(g, u), k),
                f"(1) {g.edge_labels()} U={u} k={k}",
            )
            if g.n * k <= 16:
                left = induced_delete(gk, layer_vertices(g, k, g.labels, [1]))
                right = disjoint_union([g_k(g, k - 2), Graph.from_edges([f"i{j}" for j in range(g.n)])])
                res.expect(graph_isomorphic(left, right) is not None, f"(2) {g.edge_labels()} k={k}")
                for j in range(g.n):
                    left = induced_delete(gk, closed_neighbors(gk, 1 << (j * k)))
                    rest = induced_delete(g, closed_neighbors(g, 1 << j))
                    right = disjoint_union([g_k(rest, k), Graph.from_edges([f"i{q}" for q in range(k - 1)])])
                    res.expect(graph_isomorphic(left, right) is not None, f"(3) {g.edge_labels()} j={j} k={k}")
            h = random_graph(rng, rng.randint(1, 3), min_edges=0)
            union = disjoint_union([g, h])
            res.expect(g_k(union, k) == disjoint_union([g_k(g, k), g_k(h, k)]), "G_k of a disjoint union")
    return res


def _vd_cert(res: CheckResult, g: Graph, budget: Budget, label: str):
    cert = is_vertex_decomposable(g, budget)
    res.expect(cert.certified, f"{label}: refuted")
    if cert.certified:
        res.expect(validate_vertex_decomposition(cert), f"{label}: certificate fails validation")


def check_complete_layers(budget: Budget) -> CheckResult:
    res = CheckResult("complete-layers-vd", "G_k of a complete graph is vertex decomposable")
    for n in range(1, 5):
        kn = Graph.from_edges([f"x{i}" for i in range(1, n + 1)],
                              [(f"x{i}", f"x{j}") for i in range(1, n + 1) for j in range(i + 1, n + 1)])
        for k in (1, 2, 3):
            _vd_cert(res, g_k(kn, k), budget, f"K_{n} k={k}")
    return res


STAR_SIZES = ([2, 2], [3, 3], [2, 3], [3, 4])


def check_star_complete_layers(budget: Budget) -> CheckResult:
    res = CheckResult("star-complete-layers-vd", "G_k of a star complete graph is vertex decomposable")
    for sizes in STAR_SIZES:
        g = star_complete(StarCompleteSpec("x", sizes))
        for k in (1, 2, 3):
            _vd_cert(res, g_k(g, k), budget, f"sizes={sizes} k={k}")
    return res


def _lq_suite(res: CheckResult, instances, budget: Budget, ks=(1, 2), polarized=False, vd_layers=False):
    for label, g in instances:
        for k in ks:
            ideal = symbolic_power_cover(g, k) if g.num_edges else cover_ideal(g)
            if polarized:
                ideal = polarize(ideal)[0]
            cert = linear_quotients_order(ideal, budget)
            ok = cert.certified and validate_linear_quotients(cert)
            res.expect(ok, f"{label} k={k}: no linear quotients")
            if vd_layers:
                _vd_cert(res, g_k(g, k), budget, f"{label} k={k}")


def check_pure_attachments(budget: Budget) -> CheckResult:
    res = CheckResult("pure-attachments", "pure star completes on all but one host vertex")
    _lq_suite(res, pure_attachment_instances(), budget, vd_layers=True)
    return res


def check_mixed_attachments(budget: Budget) -> CheckResult:
    res = CheckResult("mixed-attachments", "non-pure star completes on a set with independent complement")
    _lq_suite(res, mixed_attachment_instances(), budget, vd_layers=True)
    return res


def check_whiskered_covers(budget: Budget) -> CheckResult:
    res = CheckResult("whiskered-covers", "whiskers on a vertex cover give linear quotients")
    _lq_suite(res, whiskered_cover_instances(), budget, polarized=True)
    return res


def check_cameron_walker(budget: Budget) -> CheckResult:
    res = CheckResult("cameron-walker", "Cameron-Walker graphs have linear quotients")
    for label, g in cameron_walker_instances():
        res.expect(induced_matching_number(g) == matching_number(g), f"{label}: not Cameron-Walker")
    _lq_suite(res, cameron_walker_instances(), budget)
    return res


def check_clique_whiskering(budget: Budget) -> CheckResult:
    res = CheckResult("clique-whiskering", "clique whiskering gives linear quotients; degree identity")
    insts = clique_whisker_instances()
    _lq_suite(res, [(label, gp) for label, _, _, gp in insts], budget)
    for label, g, pi, gp in insts:
        for k in (1, 2):
            d = deg_max(cover_ideal(g_k(gp, k)))
            res.expect(d == k * g.n, f"{label} k={k}: deg {d} != {k * g.n}")
    return res


def check_cover_degrees(budget: Budget, count: int = 30, seed: int = SEED + 7) -> CheckResult:
    res = CheckResult("cover-degrees", "maximal minimal-cover sizes under G -> G_k")
    rng = random.Random(seed)
    for t in range(count):
        g = random_graph(rng, rng.randint(2, 6))
        base = deg_max(cover_ideal(g))
        for k in (1, 2, 3):
            res.expect(k * base <= deg_max(cover_ideal(g_k(g, k))), f"{g.edge_labels()} k={k}")
    for sizes in STAR_SIZES + ([2, 2, 2], [4]):
        g = star_complete(StarCompleteSpec("x", sizes))
        for k in (1, 2, 3):
            res.expect(deg_max(cover_ideal(g_k(g, k))) == k * (g.n - 1), f"star {sizes} k={k}")
    for label, g, pi, gp in clique_whisker_instances(10, seed + 1):
        if any(not part for part in pi.parts):
            continue
        for k in (1, 2, 3):
            res.expect(deg_max(cover_ideal(g_k(gp, k))) == k * g.n, f"{label} k={k}")
    return res


def check_regularity_formula(budget: Budget, seed: int = SEED + 8) -> CheckResult:
    res = CheckResult("regularity-formula", "reg J(G)^(k) = k * deg J(G)")
    stars = [(f"star {s}", star_complete(StarCompleteSpec("x", s))) for s in ([3, 3], [2, 2, 2])]
    whiskered = [(label, gp) for label, _, _, gp in clique_whisker_instances()]
    bipartite = bipartite_attachment_instances()
    for label, g in stars + whiskered + bipartite:
        if not g.num_edges:
            continue
        base = deg_max(cover_ideal(g))
        for k in (1, 2):
            r = regularity(symbolic_power_cover(g, k))
            res.expect(r == k * base, f"{label} k={k}: reg {r} != {k * base}")
    rng = random.Random(seed)
    for t in range(15):
        g = random_bipartite(rng, rng.randint(2, 6))
        if not g.num_edges:
            continue
        j = cover_ideal(g)
        for k in (1, 2, 3):
            res.expect(power(j, k) == symbolic_power_cover(g, k), f"bipartite {g.edge_labels()} k={k}")
    return res


def lq_ideals_from_suites():
    """Ideals the whisker, Cameron-Walker and clique-whisker suites certify."""
    out = []
    for label, g in whiskered_cover_instances():
        for k in (1, 2):
            out.append((label, k, polarize(symbolic_power_cover(g, k))[0]))
    for label, g in cameron_walker_instances():
        for k in (1, 2):
            out.append((label, k, symbolic_power_cover(g, k)))
    for label, _, _, gp in clique_whisker_instances():
        if gp.num_edges:
            for k in (1, 2):
                out.append((label, k, symbolic_power_cover(gp, k)))
    return out


def check_betti_cross_oracle(budget: Budget, fields=(2, 3), hochster_vars: int = 20) -> CheckResult:
    res = CheckResult("betti-cross-oracle", "Betti tables from linear quotients vs Hochster and Koszul homology")
    hochster_runs = skipped = 0
    for label, k, ideal in lq_ideals_from_suites():
        cert = linear_quotients_order(ideal, budget)
        if not cert.certified:
            res.expect(False, f"{label} k={k}: no certificate")
            continue
        quotient_table = betti_from_linear_quotients(cert)
        squarefree = polarize(ideal)[0]
        for p in fields:
            res.expect(betti_table(ideal, p) == quotient_table, f"{label} k={k} F_{p}: koszul route differs")
            if squarefree.nvars <= hochster_vars:
                hochster_runs += 1
                res.expect(betti_table_hochster(squarefree, p) == quotient_table,
                           f"{label} k={k} F_{p}: hochster route differs")
            else:
                skipped += 1
    res.details.update(hochster_runs=hochster_runs, hochster_skipped=skipped)
    return res


def check_kernel_properties(budget: Budget, seed: int = SEED + 9) -> CheckResult:
    res = CheckResult("kernel-properties", "randomized invariants of the graph, ideal and certificate kernels")
    rng = random.Random(seed)
    for t in range(120):
        g = random_graph(rng, rng.randint(1, 8), density=rng.choice([0.3, 0.5, 0.7]), min_edges=0)
        full = g.full
        mis = maximal_independent_sets(g)
        covers = minimal_vertex_covers(g)
        res.expect(sorted(full & ~c for c in covers) == mis, "cover/independent complement")
        for c in covers:
            minimal = all(not is_independent(g, full & ~(c & ~(1 << v))) for v in bits(c))
            res.expect(is_independent(g, full & ~c) and minimal, "cover not minimal")
        for v in range(g.n):
            res.expect(is_shedding(g, v) == shedding_by_definition(g.adj, full, v), "shedding restatement")
            if is_simplicial(g, v):
                for w in bits(g.adj[v]):
                    res.expect(is_shedding(g, w), "neighbor of simplicial vertex not shedding")
        res.expect(induced_matching_number(g) <= matching_number(g), "induced matching above matching")
        if g.n <= 8:
            res.expect(graph_isomorphic(g, g) is not None, "isomorphism not reflexive")
            h = Graph.from_edges(list(reversed(g.labels)), g.edge_labels())
            fw, bw = graph_isomorphic(g, h), graph_isomorphic(h, g)
            res.expect((fw is None) == (bw is None), "isomorphism not symmetric")
    for t in range(120):
        n = rng.randint(1, 4)
        ring = tuple(f"y{i}" for i in range(n))

        def rand_ideal():
            gens = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 4))]
            return MonomialIdeal(ring, tuple(sorted(set(gens))))

        from .ideal import minimalize

        a = minimalize(ring, rand_ideal().gens)
        b = minimalize(ring, rand_ideal().gens)
        m = tuple(rng.randint(0, 2) for _ in range(n))
        ab, prod, col = intersect(a, b), multiply(a, b), colon_by_monomial(a, m)
        for probe in _all_monomials(n, 4):
            res.expect(ab.contains(probe) == (a.contains(probe) and b.contains(probe)), "intersection membership")
            res.expect(
                col.contains(probe) == a.contains(tuple(x + y for x, y in zip(probe, m))), "colon membership"
            )
        for u in prod.gens:
            res.expect(any(divides(tuple(x + y for x, y in zip(s, t)), u) for s in a.gens for t in b.gens),
                       "product generator not a product")
    for t in range(80):
        g = random_graph(rng, rng.randint(2, 7), min_edges=1)
        vd = is_vertex_decomposable(g, budget)
        res.expect(validate_vertex_decomposition(vd), "VD certificate fails revalidation")
        j = cover_ideal(g)
        lq = linear_quotients_order(j, budget)
        if lq.certified:
            res.expect(validate_linear_quotients(lq), "LQ certificate fails revalidation")
        if vd.certified:
            res.expect(lq.certified, "vertex decomposable but J(G) lacks linear quotients")
    return res


def _all_monomials(n: int, top: int):
    if n == 0:
        yield ()
        return
    for rest in _all_monomials(n - 1, top):
        for e in range(top + 1):
            yield rest + (e,)


CHECKS: dict = {
    "triangle-pendants": check_triangle_pendants,
    "square-two-triangles": check_square_two_triangles,
    "polarization-layered": check_polarization_layered,
    "simplicial-layers": check_simplicial_layers,
    "layer-deletions": check_layer_deletions,
    "complete-layers-vd": check_complete_layers,
    "star-complete-layers-vd": check_star_complete_layers,
    "pure-attachments": check_pure_attachments,
    "mixed-attachments": check_mixed_attachments,
    "whiskered-covers": check_whiskered_covers,
    "cameron-walker": check_cameron_walker,
    "clique-whiskering": check_clique_whiskering,
    "cover-degrees": check_cover_degrees,
    "regularity-formula": check_regularity_formula,
    "betti-cross-oracle": check_betti_cross_oracle,
    "kernel-properties": check_kernel_properties,
}

# the numbered keys accepted by the ``verify`` subcommand
ALIASES = {
    "ex-4.12": "triangle-pendants",
    "ex-4.4": "square-two-triangles",
    "lem-2.9": "polarization-layered",
    "lem-3.1": "simplicial-layers",
    "lem-3.3": "layer-deletions",
    "thm-3.7": "complete-layers-vd",
    "thm-3.8": "star-complete-layers-vd",
    "thm-4.2": "pure-attachments",
    "thm-4.3": "mixed-attachments",
    "cor-4.5": "whiskered-covers",
    "cor-4.7": "cameron-walker",
    "thm-4.9": "clique-whiskering",
    "obs-4.10": "cover-degrees",
    "cor-4.11": "regularity-formula",
}


def resolve(name: str) -> list:
    if name == "all":
        return list(CHECKS)
    key = ALIASES.get(name, name)
    if key not in CHECKS:
        raise KeyError(f"unknown check {name!r}")
    return [key]


def run_check(key: str, nodes: int = DEFAULT_NODES, seconds: float = DEFAULT_SECONDS) -> CheckResult:
    """Run one check with its own search budget."""
    fn: Callable = CHECKS[key]
    budget = Budget(nodes, seconds)
    start = time.monotonic()
    try:
        res = fn(budget)
    except Exception as exc:  # a crash is a failed check, not an aborted run
        log.exception("check %s crashed", key)
        res = CheckResult(key, fn.__doc__ or key, passed=False, failures=[f"{type(exc).__name__}: {exc}"])
    res.seconds = time.monotonic() - start
    return res
