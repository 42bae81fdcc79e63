"""Vertex decomposability of graphs with checkable certificates.

Every recursion state is an induced subgraph of the input, so results are
memoized by vertex bitmask. A certificate is a decomposition tree whose
internal nodes name a shedding vertex ``v`` with children for ``G - v`` and
``G - N[v]``; shared subtrees are stored once.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from ._budget import as_budget
from .betti import is_componentwise_linear
from .errors import CertificateError, FormatError
from .graph import Graph, _is_shedding, bits, from_json as graph_from_json
from .graph import popcount, to_json as graph_to_json
from .ideal import cover_ideal

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VDNode:
    mask: int
    vertex: Optional[int] = None
    delete: Optional["VDNode"] = None
    link: Optional["VDNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None


@dataclass(frozen=True)
class VDCertificate:
    graph: Graph
    tree: Optional[VDNode] = None
    refuted: bool = False
    nodes: int = field(default=0, compare=False)

    @property
    def certified(self) -> bool:
        return not self.refuted

    def to_json(self) -> dict:
        out = {"type": "vertex-decomposition", "graph": graph_to_json(self.graph)}
        if self.refuted:
            out.update(refuted=True, nodes=self.nodes)
            return out
        table, ids = [], {}

        def visit(node):
            if id(node) in ids:
                return ids[id(node)]
            if node.is_leaf:
                entry = {"leaf": self.graph.labels_of(node.mask)}
            else:
                entry = {
                    "vertex": self.graph.labels[node.vertex],
                    "delete": visit(node.delete),
                    "link": visit(node.link),
                }
            ids[id(node)] = len(table)
            table.append(entry)
            return ids[id(node)]

        out["root"] = visit(self.tree)
        out["nodes"] = table
        return out

    @classmethod
    def from_json(cls, data) -> "VDCertificate":
        if data.get("type") != "vertex-decomposition":
            raise FormatError("not a vertex-decomposition certificate")
        g = graph_from_json(data["graph"])
        if data.get("refuted"):
            return cls(g, refuted=True, nodes=int(data.get("nodes", 0)))
        table = data["nodes"]
        built = {}

        def build(i, mask):
            key = (i, mask)
            if key in built:
                return built[key]
            entry = table[i]
            if "leaf" in entry:
                node = VDNode(mask)
                if g.mask(entry["leaf"]) != mask:
                    raise CertificateError("leaf vertex set does not match its position")
            else:
                v = g.index(entry["vertex"])
                closed = g.adj[v] | 1 << v
                node = VDNode(
                    mask, v, build(entry["delete"], mask & ~(1 << v)), build(entry["link"], mask & ~closed)
                )
            built[key] = node
            return node

        try:
            tree = build(int(data["root"]), g.full)
        except (KeyError, IndexError, TypeError) as exc:
            raise FormatError(f"malformed decomposition tree: {exc}") from None
        return cls(g, tree)


def _has_edge(adj, mask: int) -> bool:
    return any(adj[i] & mask for i in bits(mask))


def _candidates(adj, mask: int) -> list:
    """Vertices worth trying as shedding vertices, most promising first:
    neighbors of simplicial vertices, then by degree."""
    favored = 0
    for s in bits(mask):
        nb = adj[s] & mask
        if nb and all((adj[w] | 1 << w) & nb == nb for w in bits(nb)):
            favored |= nb
    verts = [v for v in bits(mask) if adj[v] & mask]
    return sorted(verts, key=lambda v: (not favored >> v & 1, -popcount(adj[v] & mask), v))


def is_vertex_decomposable(g: Graph, budget=None) -> VDCertificate:
    """Certificate tree, refutation, or ``BudgetExceeded``."""
    budget = as_budget(budget)
    adj = g.adj
    memo = {}

    def solve(mask):
        if mask in memo:
            return memo[mask]
        budget.tick("vertex-decomposability search")
        if not _has_edge(adj, mask):
            memo[mask] = VDNode(mask)
            return memo[mask]
        result = None
        for v in _candidates(adj, mask):
            if not _is_shedding(adj, mask, v):
                continue
            delete = solve(mask & ~(1 << v))
            if delete is None:
                continue
            link = solve(mask & ~(adj[v] | 1 << v))
            if link is None:
                continue
            result = VDNode(mask, v, delete, link)
            break
        memo[mask] = result
        return result

    tree = solve(g.full)
    if tree is None:
        log.debug("vertex decomposability refuted after %d states", budget.used)
        return VDCertificate(g, refuted=True, nodes=budget.used)
    return VDCertificate(g, tree, nodes=budget.used)


def _independent_sets(adj, mask: int):
    """Every independent set of the subgraph on ``mask`` (including the empty set)."""
    stack = [(0, mask)]
    while stack:
        chosen, free = stack.pop()
        if not free:
            yield chosen
            continue
        v = free & -free
        i = v.bit_length() - 1
        stack.append((chosen, free & ~v))
        stack.append((chosen | v, free & ~v & ~adj[i]))


def shedding_by_definition(adj, mask: int, v: int) -> bool:
    """No independent set of G - N[v] is a maximal independent set of G - v."""
    if not adj[v] & mask:
        return True
    rest = mask & ~(1 << v)
    for s in _independent_sets(adj, mask & ~(adj[v] | 1 << v)):
        # maximal in G - v: every other vertex has a neighbor in s
        if all(adj[w] & s for w in bits(rest & ~s)):
            return False
    return True


def validate_vertex_decomposition(cert: VDCertificate, budget=None) -> bool:
    """Check every node against the definition; refutations are re-searched."""
    g = cert.graph
    if cert.refuted:
        return is_vertex_decomposable(g, budget).refuted
    adj = g.adj
    seen = set()
    stack = [(cert.tree, g.full)]
    while stack:
        node, mask = stack.pop()
        if node.mask != mask:
            return False
        if (id(node), mask) in seen:
            continue
        seen.add((id(node), mask))
        if node.is_leaf:
            if _has_edge(adj, mask):
                return False
            continue
        v = node.vertex
        if not mask >> v & 1 or not shedding_by_definition(adj, mask, v):
            return False
        stack.append((node.delete, mask & ~(1 << v)))
        stack.append((node.link, mask & ~(adj[v] | 1 << v)))
    return True


def seq_cm_proxy(g: Graph, p: int = 2) -> bool:
    """Componentwise linearity of the cover ideal over F_p, which is
    equivalent to sequential Cohen-Macaulayness of ``g`` over that field."""
    return is_componentwise_linear(cover_ideal(g), p)
