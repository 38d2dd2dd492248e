"""Componentwise linearity, Betti number bounds, basis extension and gin sampling."""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from . import terms as T
from .groebner import buchberger
from .invariants import invariant_report, resolution_ranks
from .involutive import NotAPommaretBasis, PommaretBasis, involutive_normal_form, pommaret_basis
from .linalg import Echelon
from .monomial import (
    MonomialIdeal,
    is_quasi_stable,
    is_stable,
    monomial_pommaret_complete,
)
from .polynomial import Polynomial
from .regularity import (
    component_ideal,
    find_delta_regular_coordinates,
    is_componentwise_delta_regular,
)
from .ring import LinearChange, rank_and_inverse
from .terms import TermOrder

log = logging.getLogger(__name__)

REVLEX = TermOrder.REVLEX


class InvariantViolation(AssertionError):
    """Two computations that must agree did not."""


# -- minimal generators ------------------------------------------------------


@dataclass(frozen=True)
class Beta0Profile:
    by_degree: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.by_degree.values())


def beta0(F: Sequence[Polynomial] | MonomialIdeal, order: TermOrder = REVLEX) -> Beta0Profile:
    """Graded numbers of minimal generators: dim I_d - dim (m I)_d."""
    if isinstance(F, MonomialIdeal):
        return Beta0Profile(dict(sorted(Counter(T.degree(g) for g in F.gens).items())))
    G = buchberger(F, order)
    R = G.ring
    degrees = range(min(g.degree() for g in G.elements), G.max_degree() + 1)
    out = {}
    prev: list[Polynomial] = []
    for d in degrees:
        comp = component_ideal(G.elements, d, order)
        E = Echelon(R, order)
        for f in prev:
            for i in range(1, R.n + 1):
                E.add(f.mul_term(T.unit_vector(R.n, i)))
        b = len(comp) - E.rank
        if b:
            out[d] = b
        prev = comp
    return Beta0Profile(out)


# -- componentwise linearity -------------------------------------------------


@dataclass(frozen=True)
class ComponentwiseVerdict:
    verdict: bool
    route: str  # the criterion that decided
    lt_stable: bool
    beta0_ideal: int
    beta0_leading: int
    component_regularity: dict[int, int]  # d -> reg <I_d>, the cross-check
    change: LinearChange
    generators: tuple[Polynomial, ...] = field(repr=False)


def is_componentwise_linear(
    F: Sequence[Polynomial], order: TermOrder = REVLEX, *, seed: int = 0, cross_check: bool = True
) -> ComponentwiseVerdict:
    """Decide via: lt I stable and beta_0(I) = beta_0(lt I), in componentwise
    delta-regular coordinates.  The cross-check asks whether every component
    ideal <I_d> with d up to reg I has regularity d."""
    F = [f for f in F if f]
    coords = find_delta_regular_coordinates(
        F, order, seed=seed, accept=lambda G: is_componentwise_delta_regular(G, order)
    )
    G = list(coords.generators)
    lt = buchberger(G, order).leading_ideal()
    stable = is_stable(lt)
    b_ideal = beta0(G, order).total
    b_lead = len(lt.gens)
    verdict = stable and b_ideal == b_lead
    table: dict[int, int] = {}
    if cross_check:
        reg = coords.basis.degree()
        low = min(f.degree() for f in G)
        for d in range(low, reg + 1):
            table[d] = pommaret_basis(component_ideal(G, d, order), order).degree()
        if verdict != all(r == d for d, r in table.items()):
            raise InvariantViolation("componentwise linearity criteria disagree")
    return ComponentwiseVerdict(verdict, "stable-beta0", stable, b_ideal, b_lead, table, coords.change, tuple(G))


def minimal_resolution_test(H: PommaretBasis) -> bool:
    """True iff no recorded representation has a nonzero constant coefficient."""
    return not any(P.coefficient((0,) * H.n) for rep in H.reps.values() for P in rep.values())


def betti_bound_check(H) -> bool:
    """beta_i >= C(p+1, i+1) for 0 <= i <= p = pd I, with beta_i read from the basis."""
    total = resolution_ranks(H).total
    p = len(total) - 1
    return all(total[i] >= comb(p + 1, i + 1) for i in range(p + 1))


def betti_persistence_check(H, reading: str = "total") -> bool:
    """Nonvanishing Betti numbers persist towards smaller homological degree.

    ``total``: beta_i != 0 implies beta_i' != 0 for i' < i.
    ``table``: beta_{i,i+j} != 0 implies beta_{i',i'+j} != 0 (rows of the Betti table).
    """
    ranks = resolution_ranks(H)
    if reading == "total":
        nz = [r > 0 for r in ranks.total]
        return all(nz[k] for i in range(len(nz)) if nz[i] for k in range(i))
    if reading == "table":
        big = ranks.bigraded
        return all(
            big.get((k, k + j - i), 0) > 0
            for (i, j), v in big.items() if v
            for k in range(i)
        )
    raise ValueError(f"unknown reading {reading!r}")


# -- extending a basis by one element ----------------------------------------


class ExtensionRejected(ValueError):
    def __init__(self, reason: str, witness=None):
        super().__init__(reason if witness is None else f"{reason}: {witness}")
        self.reason = reason
        self.witness = witness


def extend_basis(H: PommaretBasis, h: Polynomial) -> PommaretBasis:
    """Pommaret basis of I + <h> when I : h is generated by the non-multiplicative
    variables of h; otherwise :class:`ExtensionRejected`."""
    order, n = H.order, H.n
    if not h or not h.is_homogeneous():
        raise ExtensionRejected("h must be a nonzero homogeneous polynomial")
    mu = h.lead_exponent(order)
    if mu in H.lead_exponents:
        raise ExtensionRejected("lt h already is a leading term of H", mu)
    for j in sorted(T.nonmultiplicative_variables(mu)):
        r = involutive_normal_form(h.mul_term(T.unit_vector(n, j)), H.elements, order)
        if r:
            raise ExtensionRejected(f"x{j} * h is not in I", r)
    # no nonzero polynomial in the multiplicative variables of h multiplies h into I
    mult = T.multiplicative_variables(mu)
    for k in range(H.degree() + 1):
        D = h.degree() + k
        E = Echelon(H.ring, order)
        E.extend(component_ideal(H.elements, D, order))
        base = E.rank
        monos = [m for m in T.monomials_of_degree(n, k) if all(m[i - 1] == 0 for i in range(1, n + 1) if i not in mult)]
        E.extend(h.mul_term(m) for m in monos)
        if E.rank != base + len(monos):
            raise ExtensionRejected(f"a multiplicative multiple of h of degree {D} lies in I")
    try:
        return PommaretBasis.from_elements(list(H.elements) + [h], order)
    except NotAPommaretBasis as exc:
        raise ExtensionRejected("the extended set fails the involutive criterion") from exc


# -- generic initial ideal by sampling (experimental) ---------------------------


@dataclass(frozen=True)
class GinSample:
    """Most frequent leading ideal over random coordinate changes.

    EXPERIMENTAL: there is no certificate that this equals the generic initial ideal.
    """

    candidate: MonomialIdeal | None
    tied: tuple[MonomialIdeal, ...]
    votes: dict[MonomialIdeal, int]
    retries: int
    quasi_stable: bool
    stable: bool | None  # only meaningful in characteristic 0
    invariants_match: bool
    experimental: bool = True

    @property
    def unanimous(self) -> bool:
        return len(self.votes) == 1


def _random_invertible(R, rng: random.Random, bound: int) -> LinearChange:
    while True:
        rows = [[R.coerce(rng.randint(-bound, bound)) for _ in range(R.n)] for _ in range(R.n)]
        if rank_and_inverse(R, rows)[0] == R.n:
            return LinearChange(R, rows)


def gin_sample(
    F: Sequence[Polynomial],
    trials: int = 16,
    seed: int = 0,
    entry_bound: int = 10,
    order: TermOrder = REVLEX,
    max_retries: int = 10,
) -> GinSample:
    if trials < 1:
        raise ValueError("trials must be positive")
    F = [f for f in F if f]
    R = F[0].ring
    if R.characteristic:
        log.warning("gin sampling over a prime field: the candidate need not be stable")
    votes: Counter = Counter()
    retries = 0
    for t in range(trials):
        for attempt in range(max_retries + 1):
            rng = random.Random((seed * 1_000_003 + t) * 1_000_003 + attempt)
            A = _random_invertible(R, rng, entry_bound)
            lt = buchberger([A.apply(f) for f in F], order).leading_ideal()
            if is_quasi_stable(lt):
                votes[lt] += 1
                break
            retries += 1
    if not votes:
        return GinSample(None, (), {}, retries, False, None, False)
    top = max(votes.values())
    leaders = sorted((I for I, v in votes.items() if v == top), key=lambda I: I.gens)
    if len(leaders) > 1:
        log.warning("gin vote tie between %d candidates", len(leaders))
        return GinSample(None, tuple(leaders), dict(votes), retries, False, None, False)
    cand = leaders[0]
    qs = is_quasi_stable(cand)
    stable = is_stable(cand) if R.characteristic == 0 else None
    reference = find_delta_regular_coordinates(F, order, seed=seed).basis
    mono = monomial_pommaret_complete(cand)
    match = invariant_report(reference).transferable() == invariant_report(mono).transferable()
    return GinSample(cand, (), dict(votes), retries, qs, stable, match)


def gin_rank_comparison(H, G) -> bool:
    """Entrywise r_{i,j}(H) <= r_{i,j}(G)."""
    a, b = resolution_ranks(H).bigraded, resolution_ranks(G).bigraded
    return all(v <= b.get(key, 0) for key, v in a.items())
