"""Graded Betti numbers of monomial ideals over F_p.

Two independent routes:

* ``"koszul"`` (default): for every ``b`` in the lcm lattice, the upper
  Koszul simplicial complex ``K^b(I) = {F squarefree : x^(b-F) in I}`` has
  ``beta_{i,b}(I) = dim H_{i-1}(K^b)``. Works for any monomial ideal.
* ``"hochster"``: polarize, then sum ``dim H_{|W|-i-2}(Delta_W)`` over
  vertex sets ``W`` of the Stanley-Reisner complex. A ``W`` that is not a
  union of generator supports has a cone for ``Delta_W`` and is skipped.

Both only visit lcm-lattice elements; the lattice is built on polarized
bitmasks so an lcm is a bitwise or.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .complex import check_field, nonface_betti, reduced_betti
from .errors import IdealError, TooLargeError
from .graph import popcount
from .ideal import MonomialIdeal, deg_max, degree_component, polarize

MAX_HOCHSTER_VARS = 40
MAX_LATTICE = 2_000_000


@dataclass(frozen=True)
class BettiTable:
    """``entries[(i, j)] = beta_{i,j}`` of the ideal (not of R/I)."""

    entries: dict = field(default_factory=dict)
    field_char: int = 2

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def regularity(self) -> int:
        if not self.entries:
            raise IdealError("the zero ideal has no regularity")
        return max(j - i for i, j in self.entries)

    def to_json(self) -> dict:
        return {
            "field": self.field_char,
            "entries": [[i, j, b] for (i, j), b in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data) -> "BettiTable":
        return cls({(int(i), int(j)): int(b) for i, j, b in data["entries"]}, int(data["field"]))

    def render(self) -> str:
        """Triangular table, rows ``j - i`` and columns ``i``."""
        if not self.entries:
            return "total: 0\n"
        cols = range(self.projective_dimension + 1)
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in list(self.entries.values()) + [self.total(i) for i in cols])
        width = max(width, len(str(cols[-1])))
        head = " " * 7 + " ".join(str(i).rjust(width) for i in cols)
        lines = [head, "total: " + " ".join(str(self.total(i)).rjust(width) for i in cols)]
        for r in rows:
            cells = [str(self[(i, i + r)] or ".").rjust(width) for i in cols]
            lines.append(f"{r:>5}: " + " ".join(cells))
        return "\n".join(lines) + "\n"


# -- lcm lattice in polarized coordinates ------------------------------------


class _Polar:
    """Bitmask encoding: variable ``i`` owns a contiguous block whose first
    ``e`` bits encode the exponent ``e``."""

    def __init__(self, ideal: MonomialIdeal):
        top = [max((g[i] for g in ideal.gens), default=0) for i in range(ideal.nvars)]
        self.offsets = []
        ends = 0
        pos = 0
        for e in top:
            self.offsets.append(pos)
            pos += e
            if e:
                ends |= 1 << (pos - 1)
        self.ends = ends
        self.gens = [self.encode(g) for g in ideal.gens]

    def encode(self, m) -> int:
        out = 0
        for off, e in zip(self.offsets, m):
            out |= ((1 << e) - 1) << off
        return out

    def tops(self, b: int) -> int:
        """One bit per variable in the support: the highest bit of its block."""
        return b & (~(b >> 1) | self.ends)


def lcm_lattice(gens, cap: Optional[int] = MAX_LATTICE) -> list:
    """All lcms of nonempty generator subsets (bitmask form), sorted by
    degree then value."""
    lattice = set()
    for g in gens:
        lattice |= {a | g for a in lattice}
        lattice.add(g)
        if cap is not None and len(lattice) > cap:
            raise TooLargeError(f"lcm lattice exceeds {cap} elements")
    return sorted(lattice, key=lambda b: (popcount(b), b))


def _koszul_homology(b: int, gens, ends: int, p: int) -> dict:
    tops = b & (~(b >> 1) | ends)
    return reduced_betti([tops & ~g for g in gens if g & ~b == 0], p)


def _koszul_chunk(args):
    chunk, gens, ends, p = args
    table = {}
    for b in chunk:
        deg = popcount(b)
        for d, h in _koszul_homology(b, gens, ends, p).items():
            key = (d + 1, deg)
            table[key] = table.get(key, 0) + h
    return table


def _merge(tables) -> dict:
    out = {}
    for t in tables:
        for k, v in t.items():
            out[k] = out.get(k, 0) + v
    return out


def _run_chunks(fn, items, extra, n_jobs: int):
    if n_jobs <= 1 or len(items) < 64:
        return fn((items,) + extra)
    size = -(-len(items) // (4 * n_jobs))
    chunks = [(items[i:i + size],) + extra for i in range(0, len(items), size)]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        # pointwise addition is order independent
        return _merge(pool.map(fn, chunks))


def betti_table(ideal: MonomialIdeal, p: int = 2, method: str = "koszul", n_jobs: int = 1) -> BettiTable:
    """Graded Betti table of ``ideal`` over F_p."""
    check_field(p)
    if method == "hochster":
        return betti_table_hochster(polarize(ideal)[0], p, n_jobs=n_jobs)
    if method != "koszul":
        raise ValueError(f"unknown method {method!r}")
    if ideal.is_zero:
        return BettiTable({}, p)
    polar = _Polar(ideal)
    lattice = lcm_lattice(polar.gens)
    table = _run_chunks(_koszul_chunk, lattice, (polar.gens, polar.ends, p), n_jobs)
    return BettiTable(table, p)


def _hochster_chunk(args):
    chunk, gens, p = args
    table = {}
    for w in chunk:
        size = popcount(w)
        # the minimal nonfaces of Delta_W are the generators inside W
        for d, h in nonface_betti(w, [g for g in gens if g & ~w == 0], p).items():
            key = (size - d - 2, size)
            table[key] = table.get(key, 0) + h
    return table


def betti_table_hochster(
    ideal: MonomialIdeal, p: int = 2, max_vars: int = MAX_HOCHSTER_VARS, n_jobs: int = 1
) -> BettiTable:
    """Betti table of a squarefree ideal from its Stanley-Reisner complex.

    Each restriction ``Delta_W`` is described by its minimal nonfaces, so the
    complex is never listed facet by facet.
    """
    check_field(p)
    if not ideal.is_squarefree:
        raise IdealError("Hochster's formula needs a squarefree ideal; polarize first")
    if ideal.nvars > max_vars:
        raise TooLargeError(f"{ideal.nvars} variables exceeds the Hochster cap {max_vars}")
    if ideal.is_zero:
        return BettiTable({}, p)
    if ideal.is_unit:
        return BettiTable({(0, 0): 1}, p)
    gens = ideal.masks()
    lattice = lcm_lattice(gens)
    return BettiTable(_run_chunks(_hochster_chunk, lattice, (gens, p), n_jobs), p)


def regularity(ideal: MonomialIdeal, p: int = 2, n_jobs: int = 1) -> int:
    """``max{j - i : beta_{i,j}(I) != 0}`` of the ideal itself."""
    if ideal.is_zero:
        raise IdealError("the zero ideal has no regularity")
    return betti_table(ideal, p, n_jobs=n_jobs).regularity()


def linear_resolution_witness(ideal: MonomialIdeal, p: int = 2):
    """``None`` when ``ideal`` has a linear resolution, else ``(i, j)`` of a
    nonzero Betti number off the linear strand."""
    check_field(p)
    if ideal.is_zero:
        return None
    degs = ideal.degrees()
    if len(degs) > 1:
        g = next(g for g in ideal.gens if sum(g) == degs[-1])
        return (0, sum(g))
    d = degs[0]
    polar = _Polar(ideal)
    for b in lcm_lattice(polar.gens):
        deg = popcount(b)
        for dim in _koszul_homology(b, polar.gens, polar.ends, p):
            if deg - (dim + 1) != d:
                return (dim + 1, deg)
    return None


def has_linear_resolution(ideal: MonomialIdeal, p: int = 2) -> bool:
    return linear_resolution_witness(ideal, p) is None


def componentwise_linear_witness(ideal: MonomialIdeal, p: int = 2):
    """``None`` when componentwise linear, else the first degree ``d`` whose
    component ``I_<d>`` lacks a linear resolution.

    Degrees above ``deg_max`` need no check: there ``I_<d+1> = m I_<d>``.
    """
    check_field(p)
    if ideal.is_zero:
        return None
    for d in range(ideal.degrees()[0], deg_max(ideal) + 1):
        if not has_linear_resolution(degree_component(ideal, d), p):
            return d
    return None


def is_componentwise_linear(ideal: MonomialIdeal, p: int = 2) -> bool:
    return componentwise_linear_witness(ideal, p) is None
