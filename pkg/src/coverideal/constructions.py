"""Graph families: whiskers, clique whiskering, star completes, attachments,
the layered companion graph ``G_k`` and Cameron-Walker generators.

Label conventions (relied on across modules):

* whisker tip at ``x``: ``z_<x>``
* clique whisker for the i-th part (1-based): ``w<i>``
* star complete at ``c``: the j-th non-center vertex of the i-th clique is
  ``<c>_c<i>_<j>`` (both 1-based)
* layer ``p`` copy of ``x`` in ``G_k``: ``<x>_<p>``, ordered vertex-major
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import FormatError, GraphError
from .graph import (
    Graph,
    as_vertex_set,
    bits,
    connected_components,
    from_json,
    is_cameron_walker,
    is_clique,
)


def _with_new_vertices(g: Graph, new_labels, new_edges) -> Graph:
    clash = set(new_labels) & set(g.labels)
    if clash:
        raise GraphError(f"new vertex labels collide with existing ones: {sorted(clash)}")
    return Graph.from_edges(list(g.labels) + list(new_labels), g.edge_labels() + list(new_edges))


def add_whiskers(g: Graph, s) -> Graph:
    """G with a pendant edge ``{x, z_x}`` at every ``x`` in ``s``."""
    s = as_vertex_set(g, s)
    tips = [(x, f"z_{x}") for x in g.labels_of(s)]
    return _with_new_vertices(g, [t for _, t in tips], tips)


@dataclass(frozen=True)
class CliquePartition:
    parts: tuple

    @classmethod
    def of(cls, parts: Iterable[Iterable]) -> "CliquePartition":
        return cls(tuple(tuple(str(v) for v in part) for part in parts))

    @classmethod
    def trivial(cls, g: Graph) -> "CliquePartition":
        return cls(tuple((v,) for v in g.labels))

    def validate(self, g: Graph):
        seen = []
        for part in self.parts:
            for v in part:
                if v not in g:
                    raise GraphError(f"partition mentions unknown vertex {v!r}")
            seen.extend(part)
            if not is_clique(g, g.mask(part)):
                raise GraphError(f"part {list(part)} is not a clique")
        if len(seen) != len(set(seen)) or set(seen) != set(g.labels):
            raise GraphError("parts must be disjoint and cover every vertex")


def clique_whisker(g: Graph, pi: CliquePartition) -> Graph:
    """Add ``w_i`` joined to every vertex of the i-th part; empty parts give
    isolated ``w_i``."""
    if not isinstance(pi, CliquePartition):
        pi = CliquePartition.of(pi)
    pi.validate(g)
    names = [f"w{i}" for i in range(1, len(pi.parts) + 1)]
    edges = [(v, w) for w, part in zip(names, pi.parts) for v in part]
    return _with_new_vertices(g, names, edges)


@dataclass(frozen=True)
class StarCompleteSpec:
    """Complete graphs ``K_{m_i}`` glued at a common center; each size counts
    the center."""

    center: str
    sizes: tuple

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(m) for m in self.sizes))
        if not self.sizes:
            raise GraphError("a star complete needs at least one clique")
        if any(m < 2 for m in self.sizes):
            raise GraphError(f"clique sizes must be >= 2, got {list(self.sizes)}")

    @property
    def is_pure(self) -> bool:
        return all(m >= 3 for m in self.sizes)


def is_pure(spec: StarCompleteSpec) -> bool:
    return spec.is_pure


def _star_parts(spec: StarCompleteSpec):
    c = spec.center
    labels, edges = [], []
    for i, m in enumerate(spec.sizes, 1):
        clique = [c] + [f"{c}_c{i}_{j}" for j in range(1, m)]
        labels.extend(clique[1:])
        edges.extend((clique[a], clique[b]) for a in range(m) for b in range(a + 1, m))
    return labels, edges


def star_complete(spec: StarCompleteSpec) -> Graph:
    labels, edges = _star_parts(spec)
    return Graph.from_edges([spec.center] + labels, edges)


@dataclass(frozen=True)
class AttachmentSpec:
    host: Graph
    stars: Mapping = field(default_factory=dict)

    def validate(self):
        for x, spec in self.stars.items():
            if x not in self.host:
                raise GraphError(f"attachment point {x!r} is not a host vertex")
            if spec.center != x:
                raise GraphError(f"star at {x!r} is centered at {spec.center!r}")


def attach(spec: AttachmentSpec) -> Graph:
    """Glue each star complete onto the host by identifying its center with
    the host vertex."""
    spec.validate()
    g = spec.host
    for x in g.labels:
        if x in spec.stars:
            labels, edges = _star_parts(spec.stars[x])
            g = _with_new_vertices(g, labels, edges)
    return g


def attach_sizes(host: Graph, sizes: Mapping) -> Graph:
    """Shorthand: ``sizes`` maps a host vertex to its list of clique sizes."""
    return attach(AttachmentSpec(host, {x: StarCompleteSpec(x, s) for x, s in sizes.items()}))


def g_k(g: Graph, k: int) -> Graph:
    """Layered companion graph: ``x_p ~ y_q`` iff ``x ~ y`` and ``p + q <= k + 1``.

    ``k = 0`` gives the graph with no vertices.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    n = g.n
    labels = tuple(f"{x}_{p}" for x in g.labels for p in range(1, k + 1))
    adj = [0] * (n * k)
    for i in range(n):
        for j in bits(g.adj[i]):
            for p in range(1, k + 1):
                row = 0
                for q in range(1, k + 2 - p):
                    row |= 1 << (j * k + q - 1)
                adj[i * k + p - 1] |= row
    return Graph(labels, tuple(adj))


def layer_vertices(g: Graph, k: int, vertices, layers=None) -> int:
    """Bitmask in ``g_k(g, k)`` of the given vertices' copies (all layers by default)."""
    layers = range(1, k + 1) if layers is None else layers
    mask = 0
    for v in vertices:
        i = g.index(v)
        for p in layers:
            mask |= 1 << (i * k + p - 1)
    return mask


def cameron_walker(
    a_side: Sequence,
    b_side: Sequence,
    edges: Iterable,
    leaves: Mapping,
    triangles: Mapping = None,
) -> Graph:
    """Connected bipartite base on ``a_side`` / ``b_side`` with at least one
    leaf on every ``a`` and any number of pendant triangles on each ``b``.

    Leaves at ``a`` are ``<a>_l<i>``; the i-th triangle at ``b`` adds
    ``<b>_t<i>a`` and ``<b>_t<i>b``.
    """
    triangles = dict(triangles or {})
    a_side, b_side = [str(v) for v in a_side], [str(v) for v in b_side]
    if set(a_side) & set(b_side):
        raise GraphError("bipartition sides overlap")
    base_edges = [tuple(map(str, e)) for e in edges]
    for u, v in base_edges:
        if not ((u in a_side and v in b_side) or (u in b_side and v in a_side)):
            raise GraphError(f"base edge {(u, v)} does not cross the bipartition")
    base = Graph.from_edges(a_side + b_side, base_edges)
    if base.n > 1 and len(connected_components(base)) != 1:
        raise GraphError("bipartite base must be connected")
    for a in a_side:
        if leaves.get(a, 0) < 1:
            raise GraphError(f"vertex {a!r} of the A side needs at least one leaf")
    for b, t in triangles.items():
        if b not in b_side or t < 0:
            raise GraphError(f"bad triangle count {t!r} at {b!r}")
    labels, new_edges = [], []
    for a in a_side:
        for i in range(1, leaves[a] + 1):
            leaf = f"{a}_l{i}"
            labels.append(leaf)
            new_edges.append((a, leaf))
    for b in b_side:
        for i in range(1, triangles.get(b, 0) + 1):
            s, t = f"{b}_t{i}a", f"{b}_t{i}b"
            labels += [s, t]
            new_edges += [(b, s), (b, t), (s, t)]
    g = _with_new_vertices(base, labels, new_edges)
    if not is_cameron_walker(g, max_edges=None):
        raise GraphError("generated graph is not Cameron-Walker")
    return g


# -- JSON family specs -------------------------------------------------------


def _graph_arg(data, key="base"):
    try:
        return from_json(data[key])
    except KeyError:
        raise FormatError(f"family spec needs {key!r}") from None


def from_family_spec(data: dict) -> Graph:
    """Build a graph from a JSON family spec; see the README for schemas."""
    if not isinstance(data, dict) or "family" not in data:
        raise FormatError('family spec must be an object with a "family" key')
    family = data["family"]
    try:
        if family == "graph":
            return _graph_arg(data, "graph")
        if family == "g_k":
            return g_k(_graph_arg(data), int(data["k"]))
        if family == "whiskers":
            base = _graph_arg(data)
            return add_whiskers(base, data.get("vertices", list(base.labels)))
        if family == "star_complete":
            return star_complete(StarCompleteSpec(str(data.get("center", "a")), data["sizes"]))
        if family == "clique_whisker":
            base = _graph_arg(data)
            parts = data.get("partition")
            pi = CliquePartition.trivial(base) if parts is None else CliquePartition.of(parts)
            return clique_whisker(base, pi)
        if family == "attach":
            host = _graph_arg(data, "host")
            return attach_sizes(host, {str(k): v for k, v in data["stars"].items()})
        if family == "cameron_walker":
            return cameron_walker(
                data["a"], data["b"], data["edges"],
                {str(k): int(v) for k, v in data["leaves"].items()},
                {str(k): int(v) for k, v in data.get("triangles", {}).items()},
            )
    except KeyError as exc:
        raise FormatError(f"family {family!r} spec is missing {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise FormatError(f"family {family!r}: {exc}") from None
    raise FormatError(f"unknown family {family!r}")
