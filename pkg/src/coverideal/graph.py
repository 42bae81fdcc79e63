"""Simple graphs on labeled vertices with bitset adjacency.

A vertex set is a plain ``int`` whose bit ``i`` stands for vertex ``i`` of a
fixed graph. Python integers are unbounded, so the same code path serves any
vertex count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import (
    EnumerationOverflow,
    FormatError,
    GraphError,
    InvalidVertexError,
    TooLargeError,
)

DEFAULT_MIS_CAP = 1_000_000


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    labels: tuple
    adj: tuple

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be pairwise distinct")
        if len(self.adj) != n:
            raise GraphError("adjacency length does not match label count")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise GraphError(f"loop at vertex {self.labels[i]!r}")
            if row & ~full:
                raise GraphError("adjacency references a vertex out of range")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, labels: Iterable, edges: Iterable = ()) -> "Graph":
        """Build a graph; edge endpoints not in ``labels`` are appended in order."""
        labels = [str(v) for v in labels]
        index = {v: i for i, v in enumerate(labels)}
        pairs = []
        for edge in edges:
            u, v = (str(x) for x in edge)
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            for w in (u, v):
                if w not in index:
                    index[w] = len(labels)
                    labels.append(w)
            pairs.append((index[u], index[v]))
        adj = [0] * len(labels)
        for i, j in pairs:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(tuple(labels), tuple(adj))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidVertexError(f"no vertex {label!r}") from None

    @property
    def _index(self):
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {v: i for i, v in enumerate(self.labels)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def __contains__(self, label) -> bool:
        return label in self._index

    def mask(self, labels: Iterable) -> int:
        out = 0
        for v in labels:
            out |= 1 << self.index(v)
        return out

    def labels_of(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def edges(self) -> list:
        """Edges as index pairs ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def edge_labels(self) -> list:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges()]

    def edge_set(self) -> frozenset:
        """Order-free edge set; two graphs with equal vertex label sets and
        edge sets are the same graph up to vertex order."""
        return frozenset(frozenset(e) for e in self.edge_labels())

    def same_as(self, other: "Graph") -> bool:
        return set(self.labels) == set(other.labels) and self.edge_set() == other.edge_set()

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v) -> int:
        return popcount(self.adj[self._vertex(v)])

    def _vertex(self, v) -> int:
        if isinstance(v, int) and not isinstance(v, bool):
            if not 0 <= v < self.n:
                raise InvalidVertexError(f"vertex index {v} out of range")
            return v
        return self.index(v)

    def _check_set(self, s: int) -> int:
        if s < 0 or s & ~self.full:
            raise InvalidVertexError("vertex set has bits beyond the vertex count")
        return s

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_labels()!r})"


def as_vertex_set(g: Graph, s) -> int:
    """Accept a bitmask or an iterable of labels."""
    if isinstance(s, int) and not isinstance(s, bool):
        return g._check_set(s)
    return g.mask(s)


def _nbhd(adj, s: int) -> int:
    out = 0
    for i in bits(s):
        out |= adj[i]
    return out


def neighbors(g: Graph, s) -> int:
    """Open neighborhood N(s); may intersect ``s``."""
    return _nbhd(g.adj, as_vertex_set(g, s))


def closed_neighbors(g: Graph, s) -> int:
    s = as_vertex_set(g, s)
    return _nbhd(g.adj, s) | s


def induced_subgraph(g: Graph, keep: int) -> Graph:
    keep = g._check_set(keep)
    idx = list(bits(keep))
    pos = {old: new for new, old in enumerate(idx)}
    adj = []
    for old in idx:
        row = 0
        for j in bits(g.adj[old] & keep):
            row |= 1 << pos[j]
        adj.append(row)
    return Graph(tuple(g.labels[i] for i in idx), tuple(adj))


def induced_delete(g: Graph, u) -> Graph:
    """G minus ``u``. Labels in ``u`` that are not vertices of ``g`` are ignored."""
    if isinstance(u, int) and not isinstance(u, bool):
        drop = u & g.full
    else:
        drop = 0
        for v in u:
            if v in g:
                drop |= 1 << g.index(v)
    return induced_subgraph(g, g.full & ~drop)


def is_independent(g: Graph, x) -> bool:
    x = as_vertex_set(g, x)
    return all(not (g.adj[i] & x) for i in bits(x))


def is_clique(g: Graph, u) -> bool:
    u = as_vertex_set(g, u)
    return all((g.adj[i] | 1 << i) & u == u for i in bits(u))


def is_simplicial(g: Graph, v) -> bool:
    i = g._vertex(v)
    return is_clique(g, g.adj[i])


# -- enumeration kernels on (adjacency, induced vertex mask) -----------------


def _mis_iter(adj, mask: int):
    """Maximal independent sets of the subgraph induced on ``mask``.

    Bron-Kerbosch with pivoting, run on the complement: extending by ``v``
    discards the closed neighborhood of ``v``.
    """
    stack = [(0, mask, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                yield r
            continue
        px = p | x
        # pivot maximizing the candidates it lets us skip
        best, best_cover = -1, -1
        for u in bits(px):
            cover = popcount(p & ~(adj[u] | 1 << u))
            if cover > best_cover:
                best, best_cover = u, cover
        branch = p & (adj[best] | 1 << best)
        for v in bits(branch):
            closed = adj[v] | 1 << v
            stack.append((r | 1 << v, p & ~closed, x & ~closed))
            p &= ~(1 << v)
            x |= 1 << v


def _mis(adj, mask: int, cap: Optional[int] = DEFAULT_MIS_CAP) -> list:
    out = []
    for s in _mis_iter(adj, mask):
        out.append(s)
        if cap is not None and len(out) > cap:
            raise EnumerationOverflow(f"more than {cap} maximal independent sets")
    out.sort()
    return out


def maximal_independent_sets(g: Graph, cap: Optional[int] = DEFAULT_MIS_CAP) -> list:
    """All inclusion-maximal independent sets, sorted by bitmask value."""
    return _mis(g.adj, g.full, cap)


def minimal_vertex_covers(g: Graph, cap: Optional[int] = DEFAULT_MIS_CAP) -> list:
    full = g.full
    return sorted(full & ~s for s in maximal_independent_sets(g, cap))


def _is_shedding(adj, mask: int, v: int) -> bool:
    nv = adj[v] & mask
    if not nv:
        return True
    rest = mask & ~nv & ~(1 << v)
    # an independent set of G - N[v] that is maximal in G - v must be maximal
    # in G - N[v] as well and dominate every neighbor of v
    for s in _mis_iter(adj, rest):
        if all(adj[w] & s for w in bits(nv)):
            return False
    return True


def is_shedding(g: Graph, v) -> bool:
    """True iff ``deg(v) = 0`` or every maximal independent set of G - v meets N(v)."""
    return _is_shedding(g.adj, g.full, g._vertex(v))


# -- matchings ---------------------------------------------------------------

MAX_MATCHING_EDGES = 24


def _check_matching_size(g: Graph, max_edges):
    if max_edges is not None and g.num_edges > max_edges:
        raise TooLargeError(f"{g.num_edges} edges exceeds the exhaustive cap {max_edges}")


def matching_number(g: Graph, max_edges: Optional[int] = MAX_MATCHING_EDGES) -> int:
    _check_matching_size(g, max_edges)
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask):
        for u in bits(mask):
            if adj[u] & mask:
                break
        else:
            return 0
        top = best(mask & ~(1 << u))
        for w in bits(adj[u] & mask):
            top = max(top, 1 + best(mask & ~(1 << u) & ~(1 << w)))
        return top

    return best(g.full)


def induced_matching_number(g: Graph, max_edges: Optional[int] = MAX_MATCHING_EDGES) -> int:
    _check_matching_size(g, max_edges)
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask):
        for u in bits(mask):
            if adj[u] & mask:
                break
        else:
            return 0
        top = best(mask & ~(1 << u))
        nu = adj[u] | 1 << u
        for w in bits(adj[u] & mask):
            top = max(top, 1 + best(mask & ~nu & ~adj[w] & ~(1 << w)))
        return top

    return best(g.full)


def is_cameron_walker(g: Graph, max_edges: Optional[int] = MAX_MATCHING_EDGES) -> bool:
    return induced_matching_number(g, max_edges) == matching_number(g, max_edges)


# -- components and unions ---------------------------------------------------


def _component_masks(adj, mask: int) -> list:
    out = []
    left = mask
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            grown = _nbhd(adj, frontier) & mask & ~comp
            comp |= grown
            frontier = grown
        out.append(comp)
        left &= ~comp
    return out


def connected_components(g: Graph) -> list:
    return [induced_subgraph(g, c) for c in _component_masks(g.adj, g.full)]


def disjoint_union(graphs: Iterable[Graph], prefix: bool = True) -> Graph:
    """Disjoint union; with ``prefix`` the i-th graph's labels become ``g<i>.<label>``."""
    labels = []
    adj = []
    offset = 0
    for i, h in enumerate(graphs):
        labels.extend(f"g{i}.{v}" if prefix else v for v in h.labels)
        adj.extend(row << offset for row in h.adj)
        offset += h.n
    if len(set(labels)) != len(labels):
        raise GraphError("label collision in disjoint union")
    return Graph(tuple(labels), tuple(adj))


# -- isomorphism -------------------------------------------------------------

MAX_ISO_VERTICES = 16


def graph_isomorphic(g: Graph, h: Graph, max_n: int = MAX_ISO_VERTICES) -> Optional[dict]:
    """A label bijection g -> h preserving edges in both directions, or None."""
    if max(g.n, h.n) > max_n:
        raise TooLargeError(f"isomorphism test capped at {max_n} vertices")
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    dg = [popcount(r) for r in g.adj]
    dh = [popcount(r) for r in h.adj]
    if sorted(dg) != sorted(dh):
        return None
    # refine by the multiset of neighbor degrees
    sig_g = [(dg[i], tuple(sorted(dg[j] for j in bits(g.adj[i])))) for i in range(g.n)]
    sig_h = [(dh[i], tuple(sorted(dh[j] for j in bits(h.adj[i])))) for i in range(h.n)]
    if sorted(sig_g) != sorted(sig_h):
        return None
    order = sorted(range(g.n), key=lambda i: (-dg[i], i))
    image = [-1] * g.n
    used = 0

    def extend(pos):
        nonlocal used
        if pos == g.n:
            return True
        i = order[pos]
        for j in range(h.n):
            if used >> j & 1 or sig_h[j] != sig_g[i]:
                continue
            ok = True
            for q in range(pos):
                k = order[q]
                if (g.adj[i] >> k & 1) != (h.adj[j] >> image[k] & 1):
                    ok = False
                    break
            if ok:
                image[i] = j
                used |= 1 << j
                if extend(pos + 1):
                    return True
                used &= ~(1 << j)
        image[i] = -1
        return False

    if not extend(0):
        return None
    return {g.labels[i]: h.labels[image[i]] for i in range(g.n)}


# -- serialization -----------------------------------------------------------


def to_json(g: Graph) -> dict:
    return {"vertices": list(g.labels), "edges": [list(e) for e in g.edge_labels()]}


def from_json(data: dict) -> Graph:
    try:
        vertices = data["vertices"]
        edges = data.get("edges", [])
    except (KeyError, TypeError, AttributeError):
        raise FormatError('graph JSON needs "vertices" and "edges"') from None
    for e in edges:
        if len(e) != 2:
            raise FormatError(f"edge {e!r} is not a pair")
    labels = [str(v) for v in vertices]
    unknown = {str(x) for e in edges for x in e} - set(labels)
    if unknown:
        raise FormatError(f"edges mention undeclared vertices {sorted(unknown)}")
    seen = set()
    for e in edges:
        key = frozenset(map(str, e))
        if key in seen:
            raise FormatError(f"duplicate edge {e!r}")
        seen.add(key)
    return Graph.from_edges(labels, edges)


def parse_edge_list(text: str) -> Graph:
    """One edge per line as two labels; a single label declares a vertex.
    ``#`` starts a comment."""
    labels, edges = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split("#", 1)[0].split()
        if not fields:
            continue
        if len(fields) == 1:
            if fields[0] not in labels:
                labels.append(fields[0])
        elif len(fields) == 2:
            edges.append(tuple(fields))
        else:
            raise FormatError(f"line {lineno}: expected one or two labels")
    return Graph.from_edges(labels, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edge_labels()]
    covered = {i for e in g.edges() for i in e}
    lines.extend(g.labels[i] for i in range(g.n) if i not in covered)
    return "\n".join(lines) + "\n"
