"""Exact arithmetic on monomial ideals.

A monomial is a tuple of exponents aligned with the ring's variable list. An
ideal stores its unique minimal generating set in canonical order: total
degree first, then lexicographic order with ``x1 > x2 > ...``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FormatError, IdealError, RingMismatchError
from .graph import Graph, _mis, bits

MAX_EXPONENT = 2**16


def _key(m):
    # degree, then lexicographic with the first variable largest
    return (sum(m), tuple(-e for e in m))


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def quotient(a, b):
    """``a / gcd(a, b)``."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def _minimal(monomials) -> tuple:
    kept = []
    for m in sorted(set(monomials), key=_key):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    ring: tuple
    gens: tuple

    def __post_init__(self):
        if len(set(self.ring)) != len(self.ring):
            raise IdealError("variable names must be distinct")

    @classmethod
    def zero(cls, ring) -> "MonomialIdeal":
        return cls(tuple(ring), ())

    @classmethod
    def unit(cls, ring) -> "MonomialIdeal":
        ring = tuple(ring)
        return cls(ring, ((0,) * len(ring),))

    @classmethod
    def from_masks(cls, ring, masks: Iterable[int]) -> "MonomialIdeal":
        n = len(ring)
        return minimalize(ring, [tuple(m >> i & 1 for i in range(n)) for m in masks])

    @property
    def nvars(self) -> int:
        return len(self.ring)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def masks(self) -> list:
        if not self.is_squarefree:
            raise IdealError("bitmask form needs a squarefree ideal")
        return [sum(1 << i for i, e in enumerate(g) if e) for g in self.gens]

    def degrees(self) -> list:
        return sorted({sum(g) for g in self.gens})

    def contains(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def monomial(self, **exponents) -> tuple:
        unknown = set(exponents) - set(self.ring)
        if unknown:
            raise IdealError(f"unknown variables {sorted(unknown)}")
        return tuple(exponents.get(x, 0) for x in self.ring)

    def render_monomial(self, m) -> str:
        parts = [x if e == 1 else f"{x}^{e}" for x, e in zip(self.ring, m) if e]
        return "*".join(parts) or "1"

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(self.render_monomial(g) for g in self.gens) + ")"


def minimalize(ring: Sequence, monomials: Iterable) -> MonomialIdeal:
    """Canonical ideal generated by ``monomials``; drops redundant generators."""
    ring = tuple(str(x) for x in ring)
    n = len(ring)
    clean = []
    for m in monomials:
        m = tuple(int(e) for e in m)
        if len(m) != n:
            raise IdealError(f"monomial {m} has {len(m)} exponents, ring has {n}")
        if any(e < 0 or e >= MAX_EXPONENT for e in m):
            raise IdealError(f"exponent out of range in {m}")
        clean.append(m)
    return MonomialIdeal(ring, _minimal(clean))


def from_strings(ring: Sequence, monomials: Iterable[str]) -> MonomialIdeal:
    """Parse ``"x1^2*x3"``-style monomials; ``"1"`` is the unit monomial."""
    ring = tuple(ring)
    index = {x: i for i, x in enumerate(ring)}
    out = []
    for text in monomials:
        m = [0] * len(ring)
        text = text.strip()
        if text != "1":
            for factor in text.split("*"):
                name, _, exp = factor.strip().partition("^")
                if name not in index:
                    raise IdealError(f"unknown variable {name!r}")
                m[index[name]] += int(exp) if exp else 1
        out.append(m)
    return minimalize(ring, out)


def _same_ring(a: MonomialIdeal, b: MonomialIdeal):
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")


def sum_ideals(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.ring, _minimal(a.gens + b.gens))


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(a.ring, _minimal(lcm(u, v) for u in a.gens for v in b.gens))


def intersect_all(ring, ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    """Iterated intersection; the empty intersection is the unit ideal."""
    out = MonomialIdeal.unit(ring)
    for other in ideals:
        out = intersect(out, other)
    return out


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    return MonomialIdeal(
        a.ring, _minimal(tuple(x + y for x, y in zip(u, v)) for u in a.gens for v in b.gens)
    )


def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise IdealError("negative power")
    out = MonomialIdeal.unit(a.ring)
    for _ in range(k):
        out = multiply(out, a)
    return out


def colon_by_monomial(a: MonomialIdeal, m) -> MonomialIdeal:
    m = tuple(m)
    if len(m) != a.nvars:
        raise RingMismatchError("monomial does not match the ring")
    return MonomialIdeal(a.ring, _minimal(quotient(u, m) for u in a.gens))


def in_ring(a: MonomialIdeal, ring: Sequence) -> MonomialIdeal:
    """Re-express ``a`` over ``ring`` by variable name; ``ring`` must contain
    every variable that occurs in a generator."""
    ring = tuple(ring)
    index = {x: i for i, x in enumerate(ring)}
    out = []
    for g in a.gens:
        m = [0] * len(ring)
        for x, e in zip(a.ring, g):
            if e:
                if x not in index:
                    raise RingMismatchError(f"variable {x!r} missing from target ring")
                m[index[x]] = e
        out.append(tuple(m))
    return MonomialIdeal(ring, _minimal(out))


def prime_ideal(ring, variables: Iterable[int]) -> MonomialIdeal:
    n = len(ring)
    return MonomialIdeal(
        tuple(ring), _minimal(tuple(int(j == i) for j in range(n)) for i in variables)
    )


# -- graph ideals ------------------------------------------------------------


def edge_ideal(g: Graph) -> MonomialIdeal:
    n = g.n
    return minimalize(
        g.labels, [tuple(int(t in (i, j)) for t in range(n)) for i, j in g.edges()]
    )


def _cover_ideal_from_covers(g: Graph) -> MonomialIdeal:
    full = g.full
    covers = [full & ~s for s in _mis(g.adj, full)]
    return MonomialIdeal.from_masks(g.labels, covers)


def _edge_prime_power_intersection(g: Graph, k: int) -> MonomialIdeal:
    n = g.n
    ring = g.labels
    out = MonomialIdeal.unit(ring)
    for i, j in g.edges():
        gens = []
        for a in range(k + 1):
            m = [0] * n
            m[i], m[j] = a, k - a
            gens.append(tuple(m))
        out = intersect(out, MonomialIdeal(ring, _minimal(gens)))
    return out


def cover_ideal(g: Graph) -> MonomialIdeal:
    """Ideal of minimal vertex covers; cross-checked against the intersection
    of the edge primes unless Python runs with ``-O``."""
    j = _cover_ideal_from_covers(g)
    if __debug__:
        other = _edge_prime_power_intersection(g, 1)
        assert j == other, "cover ideal paths disagree"
    return j


def symbolic_power_cover(g: Graph, k: int) -> MonomialIdeal:
    """``J(G)^(k)``: intersection over edges of ``(x_i, x_j)^k``."""
    if k < 1:
        raise IdealError("symbolic power needs k >= 1")
    return _edge_prime_power_intersection(g, k)


def alexander_dual(a: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primes generated by each generator's support."""
    if not a.is_squarefree:
        raise IdealError("Alexander duality needs a squarefree ideal")
    return intersect_all(a.ring, (prime_ideal(a.ring, bits(m)) for m in a.masks()))


def polarize(a: MonomialIdeal):
    """Squarefree polarization.

    Returns ``(ideal, varmap)`` where ``varmap[(i, p)]`` is the new index of
    the ``p``-th copy (1-based) of variable ``i``; copies are named ``<x>_<p>``.
    """
    top = [max((g[i] for g in a.gens), default=0) for i in range(a.nvars)]
    varmap = {}
    names = []
    for i, x in enumerate(a.ring):
        for p in range(1, top[i] + 1):
            varmap[(i, p)] = len(names)
            names.append(f"{x}_{p}")
    out = []
    for g in a.gens:
        m = [0] * len(names)
        for i, e in enumerate(g):
            for p in range(1, e + 1):
                m[varmap[(i, p)]] = 1
        out.append(tuple(m))
    return MonomialIdeal(tuple(names), _minimal(out)), varmap


def deg_max(a: MonomialIdeal) -> int:
    if a.is_zero:
        raise IdealError("the zero ideal has no generators")
    return max(sum(g) for g in a.gens)


def degree_component(a: MonomialIdeal, d: int) -> MonomialIdeal:
    """Ideal generated by every degree-``d`` monomial of ``a``."""
    n = a.nvars
    out = set()

    def spread(m, start, left):
        if left == 0:
            out.add(tuple(m))
            return
        for i in range(start, n):
            m[i] += 1
            spread(m, i, left - 1)
            m[i] -= 1

    for g in a.gens:
        if sum(g) <= d:
            spread(list(g), 0, d - sum(g))
    return MonomialIdeal(a.ring, _minimal(out))


# -- serialization -----------------------------------------------------------


def to_json(a: MonomialIdeal) -> dict:
    return {"ring": list(a.ring), "generators": [list(g) for g in a.gens]}


def from_json(data: dict) -> MonomialIdeal:
    try:
        ring = data["ring"]
        gens = data["generators"]
    except (KeyError, TypeError):
        raise FormatError('ideal JSON needs "ring" and "generators"') from None
    try:
        return minimalize(ring, gens)
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad ideal JSON: {exc}") from None
