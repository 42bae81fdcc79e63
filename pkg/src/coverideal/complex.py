"""Simplicial complexes given by facets, and reduced homology over F_p.

Faces are bitmasks over the ground set. The void complex has no facets; the
irrelevant complex ``{∅}`` has the single facet ``0``. They differ in
reduced homology: ``{∅}`` has rank 1 in dimension -1, the void complex has
nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ComplexError, TooLargeError
from .graph import Graph, _mis, bits, popcount

MAX_GROUND = 20
MAX_FACES = 2_000_000


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def check_field(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ComplexError(f"field characteristic must be prime, got {p!r}")
    return p


def maximal_sets(masks: Iterable[int]) -> list:
    out = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & ~f == 0 for f in out):
            out.append(m)
    return sorted(out)


@dataclass(frozen=True)
class SimplicialComplex:
    ground: tuple
    facets: tuple

    @classmethod
    def from_facets(cls, ground, facets: Iterable) -> "SimplicialComplex":
        ground = tuple(ground)
        index = {v: i for i, v in enumerate(ground)}
        masks = []
        for f in facets:
            if isinstance(f, int):
                masks.append(f)
            else:
                try:
                    masks.append(sum(1 << index[v] for v in set(f)))
                except KeyError as exc:
                    raise ComplexError(f"facet vertex {exc} not in ground set") from None
        if any(m >> len(ground) for m in masks):
            raise ComplexError("facet outside the ground set")
        return cls(ground, tuple(maximal_sets(masks)))

    @classmethod
    def void(cls, ground=()) -> "SimplicialComplex":
        return cls(tuple(ground), ())

    @property
    def is_void(self) -> bool:
        return not self.facets

    def vertices(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    def faces(self) -> list:
        return sorted(_faces(self.facets))

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def link(self, face: int) -> "SimplicialComplex":
        return SimplicialComplex(
            self.ground, tuple(maximal_sets(f & ~face for f in self.facets if face & ~f == 0))
        )

    def deletion(self, v: int) -> "SimplicialComplex":
        return SimplicialComplex(self.ground, tuple(maximal_sets(f & ~(1 << v) for f in self.facets)))

    def restrict(self, w: int) -> "SimplicialComplex":
        if self.is_void:
            return self
        return SimplicialComplex(self.ground, tuple(maximal_sets(f & w for f in self.facets)))

    def labels_of(self, face: int) -> list:
        return [self.ground[i] for i in bits(face)]


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.labels, tuple(_mis(g.adj, g.full)))


def stanley_reisner(ideal) -> SimplicialComplex:
    """Complex of squarefree monomials outside ``ideal``.

    The facets are the complements of the minimal transversals of the
    generator supports, i.e. of the Alexander dual's generators.
    """
    from .ideal import alexander_dual

    dual = alexander_dual(ideal)
    full = (1 << ideal.nvars) - 1
    if dual.is_zero:
        return SimplicialComplex.void(ideal.ring)
    return SimplicialComplex(ideal.ring, tuple(maximal_sets(full & ~m for m in dual.masks())))


# -- homology ----------------------------------------------------------------


def _faces(facets) -> set:
    seen = set()
    for f in facets:
        if f in seen:
            continue
        sub = f
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
        if len(seen) > MAX_FACES:
            raise TooLargeError(f"complex has more than {MAX_FACES} faces")
    return seen


def _rank_f2(rows) -> int:
    basis = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            hit = basis.get(top)
            if hit is None:
                basis[top] = r
                break
            r ^= hit
    return len(basis)


def _rank_fp(rows, p: int) -> int:
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _homology_of_faces(faces, p: int) -> dict:
    by_dim = {}
    for f in faces:
        by_dim.setdefault(popcount(f) - 1, []).append(f)
    index = {d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}
    ranks = {}
    for d, fs in by_dim.items():
        if d < 0:
            continue
        below = index[d - 1]
        if p == 2:
            rows = []
            for f in fs:
                r = 0
                for b in bits(f):
                    r |= 1 << below[f & ~(1 << b)]
                rows.append(r)
            ranks[d] = _rank_f2(rows)
        else:
            rows = []
            for f in fs:
                row = {}
                for t, b in enumerate(bits(f)):
                    row[below[f & ~(1 << b)]] = 1 if t % 2 == 0 else p - 1
                rows.append(row)
            ranks[d] = _rank_fp(rows, p)
    out = {}
    for d, fs in by_dim.items():
        h = len(fs) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if h:
            out[d] = h
    return out


def reduced_betti(facets: Iterable[int], p: int = 2) -> dict:
    """Nonzero reduced Betti numbers ``{dim: rank}`` of the complex generated
    by ``facets`` over F_p.

    Cones are recognised up front. When there are fewer facets than vertices
    the nerve of the facet cover is used instead; it has the same homology.
    """
    facets = maximal_sets(facets)
    while True:
        if not facets:
            return {}
        common = facets[0]
        union = 0
        for f in facets:
            common &= f
            union |= f
        if common:
            return {}
        if facets == [0]:
            return {-1: 1}
        nverts = popcount(union)
        if len(facets) >= nverts:
            break
        # nerve: one vertex per facet, generated by the stars of the old vertices
        facets = maximal_sets(
            sum(1 << t for t, f in enumerate(facets) if f >> v & 1) for v in bits(union)
        )
    return _homology_of_faces(_faces(facets), p)


def reduced_homology_ranks(c: SimplicialComplex, p: int = 2, max_ground: int = MAX_GROUND) -> dict:
    """Reduced homology ranks of ``c`` over F_p, keyed by dimension (>= -1)."""
    check_field(p)
    if max_ground is not None and len(c.ground) > max_ground:
        raise TooLargeError(f"{len(c.ground)} ground vertices exceeds cap {max_ground}")
    return reduced_betti(c.facets, p)


# -- complexes given by minimal nonfaces -------------------------------------


def _nonface_faces(verts: int, nonfaces) -> set:
    """Faces on ``verts`` containing no nonface, by depth-first extension."""
    if any(g == 0 for g in nonfaces):
        return set()
    order = list(bits(verts))
    out = set()
    stack = [(0, 0)]
    while stack:
        face, start = stack.pop()
        out.add(face)
        if len(out) > MAX_FACES:
            raise TooLargeError(f"complex has more than {MAX_FACES} faces")
        for t in range(start, len(order)):
            bigger = face | 1 << order[t]
            if not any(g & ~bigger == 0 for g in nonfaces):
                stack.append((bigger, t + 1))
    return out


def _join(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j + 1] = out.get(i + j + 1, 0) + x * y
    return out


def _components(verts: int, nonfaces) -> list:
    parts = []
    for g in nonfaces:
        merged = g
        keep = []
        for part in parts:
            if part & merged:
                merged |= part
            else:
                keep.append(part)
        parts = keep + [merged]
    return parts


def nonface_betti(verts: int, nonfaces, p: int = 2, stats: dict = None) -> dict:
    """Reduced Betti numbers of the complex on ``verts`` whose minimal
    nonfaces are ``nonfaces`` (bitmasks inside ``verts``).

    Cones, joins and link/deletion splits with one contractible side are
    peeled off first; anything left is computed from its faces. With the
    star of ``v`` contractible, Mayer-Vietoris gives ``H(D) = H(del v)``
    when the link is acyclic and ``H_j(D) = H_{j-1}(lk v)`` when the
    deletion is.
    """
    gens = minimal_sets(g for g in nonfaces if g & ~verts == 0)
    while True:
        if not gens:
            return {} if verts else {-1: 1}
        if gens[0] == 0:
            return {}
        used = 0
        for g in gens:
            used |= g
        if verts & ~used:
            return {}
        singles = 0
        for g in gens:
            if g & (g - 1) == 0:
                singles |= g
        if not singles:
            break
        # a singleton nonface is just a missing vertex
        verts &= ~singles
        gens = [g for g in gens if not g & singles]
    parts = _components(verts, gens)
    if len(parts) > 1:
        out = {-1: 1}
        for part in parts:
            h = nonface_betti(part, [g for g in gens if g & part], p, stats)
            if not h:
                return {}
            out = _join(out, h)
        return out
    for v in bits(verts):
        rest = verts & ~(1 << v)
        dele = [g for g in gens if not g >> v & 1]
        dused = 0
        for g in dele:
            dused |= g
        if rest & ~dused:
            # the deletion is a cone, so the complex suspends the link
            link = nonface_betti(rest, [g & ~(1 << v) for g in gens], p, stats)
            return {d + 1: h for d, h in link.items()}
        lused = 0
        for g in gens:
            lused |= g & ~(1 << v)
        if rest & ~lused:
            return nonface_betti(rest, dele, p, stats)
    if stats is not None:
        stats["enumerated"] = stats.get("enumerated", 0) + 1
    return _homology_of_faces(_nonface_faces(verts, gens), p)


def minimal_sets(masks: Iterable[int]) -> list:
    out = []
    for m in sorted(set(masks), key=popcount):
        if not any(f & ~m == 0 for f in out):
            out.append(m)
    return sorted(out, key=lambda m: (popcount(m), m))
