"""Buchberger's algorithm, reduced Groebner bases and ideal membership."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import terms as T
from .monomial import MonomialIdeal
from .polynomial import Polynomial
from .ring import Ring
from .terms import Exponent, TermOrder

REVLEX = TermOrder.REVLEX


def _find_divisor(mu: Exponent, leads: Sequence[Exponent]) -> int:
    for i, lm in enumerate(leads):
        if T.divides(lm, mu):
            return i
    return -1


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder = REVLEX) -> Polynomial:
    """Full reduction of f modulo G (ordinary division)."""
    R = f.ring
    leads = [g.lead_exponent(order) for g in G]
    lcs = [g.lead_coefficient(order) for g in G]
    p = f.as_dict()
    rem: dict[Exponent, object] = {}
    key = order.key
    while p:
        mu = max(p, key=key)
        c = p[mu]
        i = _find_divisor(mu, leads)
        if i < 0:
            rem[mu] = c
            del p[mu]
            continue
        q = R.div(c, lcs[i])
        shift = T.sub(mu, leads[i])
        for nu, a in G[i].as_dict().items():
            t = T.add(nu, shift)
            v = R.sub(p[t], R.mul(q, a)) if t in p else R.neg(R.mul(q, a))
            if v:
                p[t] = v
            else:
                p.pop(t, None)
    return Polynomial(R, rem, _clean=True)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = REVLEX) -> Polynomial:
    R = f.ring
    a, b = f.lead_exponent(order), g.lead_exponent(order)
    m = T.lcm(a, b)
    return f.mul_term(T.sub(m, a), R.inv(f.lead_coefficient(order))) - g.mul_term(
        T.sub(m, b), R.inv(g.lead_coefficient(order))
    )


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    order: TermOrder
    elements: tuple[Polynomial, ...]

    def lead_exponents(self) -> list[Exponent]:
        return [g.lead_exponent(self.order) for g in self.elements]

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(self.lead_exponents(), self.ring.n)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)

    def max_degree(self) -> int:
        return max(g.degree() for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _reduce_basis(G: list[Polynomial], order: TermOrder) -> tuple[Polynomial, ...]:
    G = [g.monic(order) for g in G if g]
    leads = [g.lead_exponent(order) for g in G]
    minimal = []
    for i, g in enumerate(G):
        redundant = any(
            j != i and T.divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i)
            for j in range(len(G))
        )
        if not redundant:
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lt = g.lead_exponent(order)
        tail = g - Polynomial.monomial(g.ring, lt, g.lead_coefficient(order))
        reduced.append(Polynomial.monomial(g.ring, lt) + normal_form(tail, others, order))
    return tuple(sorted(reduced, key=lambda g: order.key(g.lead_exponent(order)), reverse=True))


def buchberger(F: Iterable[Polynomial], order: TermOrder = REVLEX) -> GroebnerBasis:
    """Reduced Groebner basis; pairs are treated lowest lcm degree first.

    Uses Buchberger's coprime criterion and the Gebauer-Moeller style chain
    criterion to skip useless pairs.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("the zero ideal has no nontrivial Groebner basis")
    R = F[0].ring
    G: list[Polynomial] = []
    pairs: set[tuple[int, int]] = set()

    def lead(i):
        return G[i].lead_exponent(order)

    def add(h: Polynomial) -> None:
        h = h.monic(order)
        G.append(h)
        k = len(G) - 1
        for i in range(k):
            pairs.add((i, k))

    for f in F:
        r = normal_form(f, G, order)
        if r:
            add(r)
    while pairs:
        i, j = min(pairs, key=lambda p: (sum(T.lcm(lead(p[0]), lead(p[1]))),
                                         order.key(T.lcm(lead(p[0]), lead(p[1]))), p))
        pairs.discard((i, j))
        a, b = lead(i), lead(j)
        m = T.lcm(a, b)
        if T.add(a, b) == m:
            continue
        if any(
            k not in (i, j)
            and T.divides(lead(k), m)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            add(r)
    if any(g.is_constant() for g in G):
        return GroebnerBasis(R, order, (Polynomial.constant(R, 1),))
    return GroebnerBasis(R, order, _reduce_basis(G, order))


def ideal_membership(f: Polynomial, G: GroebnerBasis) -> bool:
    return G.contains(f)


def leading_ideal(F: Iterable[Polynomial], order: TermOrder = REVLEX) -> MonomialIdeal:
    return buchberger(F, order).leading_ideal()


def is_groebner_basis(G: Sequence[Polynomial], order: TermOrder = REVLEX) -> bool:
    return all(
        not normal_form(s_polynomial(G[i], G[j], order), G, order)
        for i in range(len(G)) for j in range(i + 1, len(G))
    )
