"""Linear-quotient orders: search, certificates, validation, Betti numbers.

The search runs on polarized bitmasks. For generators ``v, u`` the bits of
``pol(v) & ~pol(u)`` encode ``v / gcd(v, u)`` with the same degree and the
same divisibility relations, so an order is admissible for ``I`` exactly
when it is admissible for the polarization.

Whether ``u`` may follow a prefix depends only on the prefix as a set, so
prefix sets proven hopeless are remembered and never expanded twice. An
exhausted search is therefore a proof that no admissible order exists.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from ._budget import as_budget
from .betti import BettiTable, _Polar
from .errors import CertificateError, FormatError
from .graph import bits, popcount
from .ideal import MonomialIdeal, colon_by_monomial, from_json as ideal_from_json, minimalize
from .ideal import prime_ideal, to_json as ideal_to_json

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearQuotientCertificate:
    ideal: MonomialIdeal
    order: Optional[tuple] = None
    colon_vars: Optional[tuple] = None
    refuted: bool = False
    nodes: int = field(default=0, compare=False)

    @property
    def certified(self) -> bool:
        return not self.refuted

    def ordered_generators(self) -> list:
        return [self.ideal.gens[i] for i in self.order]

    def to_json(self) -> dict:
        out = {"type": "linear-quotients", "ideal": ideal_to_json(self.ideal)}
        if self.refuted:
            out.update(refuted=True, nodes=self.nodes)
        else:
            ring = self.ideal.ring
            out["order"] = list(self.order)
            out["colon_vars"] = [[ring[v] for v in step] for step in self.colon_vars]
        return out

    @classmethod
    def from_json(cls, data) -> "LinearQuotientCertificate":
        if data.get("type") != "linear-quotients":
            raise FormatError("not a linear-quotients certificate")
        ideal = ideal_from_json(data["ideal"])
        if data.get("refuted"):
            return cls(ideal, refuted=True, nodes=int(data.get("nodes", 0)))
        index = {x: i for i, x in enumerate(ideal.ring)}
        try:
            colon = tuple(tuple(index[x] for x in step) for step in data["colon_vars"])
        except KeyError as exc:
            raise FormatError(f"unknown variable {exc} in certificate") from None
        return cls(ideal, tuple(data["order"]), colon)


def _colon_variables(polar_gens, prefix: int, u: int):
    """Bit positions of the degree-one quotients of the prefix by ``u``, or
    None when some quotient is not divisible by one of them."""
    quotients = [polar_gens[v] & ~u for v in bits(prefix)]
    single = 0
    for q in quotients:
        if q & (q - 1) == 0:
            single |= q
    for q in quotients:
        if not q & single:
            return None
    return single


def linear_quotients_order(ideal: MonomialIdeal, budget=None) -> LinearQuotientCertificate:
    """Find an admissible order of the minimal generators or prove none exists.

    Raises ``BudgetExceeded`` when the node or time budget runs out first.
    """
    budget = as_budget(budget)
    m = len(ideal.gens)
    polar = _Polar(ideal)
    gens = polar.gens
    full = (1 << m) - 1
    bit_to_var = {}
    for i, off in enumerate(polar.offsets):
        top = max((g[i] for g in ideal.gens), default=0)
        for p in range(top):
            bit_to_var[off + p] = i
    by_degree = sorted(range(m), key=lambda j: (popcount(gens[j]), j))

    dead = set()
    order = []
    colon = []
    # each frame: (prefix set, remaining candidates to try)
    stack = [(0, iter(by_degree))]
    while stack:
        prefix, candidates = stack[-1]
        if prefix == full:
            return LinearQuotientCertificate(ideal, tuple(order), tuple(colon), nodes=budget.used)
        advanced = False
        for j in candidates:
            if prefix >> j & 1:
                continue
            nxt = prefix | 1 << j
            if nxt in dead:
                continue
            single = 0 if not prefix else _colon_variables(gens, prefix, gens[j])
            if single is None:
                continue
            budget.tick("linear-quotients search")
            order.append(j)
            colon.append(tuple(sorted({bit_to_var[b] for b in bits(single)})))
            stack.append((nxt, iter(by_degree)))
            advanced = True
            break
        if not advanced:
            stack.pop()
            dead.add(prefix)
            if order:
                order.pop()
                colon.pop()
    log.debug("linear quotients refuted after %d nodes", budget.used)
    return LinearQuotientCertificate(ideal, refuted=True, nodes=budget.used)


def validate_linear_quotients(cert: LinearQuotientCertificate, budget=None) -> bool:
    """Re-check a certificate with plain ideal arithmetic.

    A positive certificate is checked step by step; a refutation is checked by
    rerunning the exhaustive search.
    """
    ideal = cert.ideal
    if cert.refuted:
        return linear_quotients_order(ideal, budget).refuted
    m = len(ideal.gens)
    if cert.order is None or sorted(cert.order) != list(range(m)):
        raise CertificateError("order is not a permutation of the generators")
    if len(cert.colon_vars) != m or (m and cert.colon_vars[0]):
        raise CertificateError("colon variable list has the wrong shape")
    ordered = cert.ordered_generators()
    for step in range(1, m):
        prefix = minimalize(ideal.ring, ordered[:step])
        got = colon_by_monomial(prefix, ordered[step])
        if got != prime_ideal(ideal.ring, cert.colon_vars[step]):
            return False
    return True


def betti_from_linear_quotients(cert: LinearQuotientCertificate, p: int = 2) -> BettiTable:
    """``beta_{i, deg u_j + i} = sum_j C(r_j, i)`` with ``r_j`` colon variables
    at step ``j``; independent of the field."""
    if cert.refuted:
        raise CertificateError("a refutation carries no resolution data")
    table = {}
    for u, step in zip(cert.ordered_generators(), cert.colon_vars):
        d, r = sum(u), len(step)
        for i in range(r + 1):
            table[(i, d + i)] = table.get((i, d + i), 0) + comb(r, i)
    return BettiTable(table, p)
