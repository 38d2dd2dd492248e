"""Pommaret bases of polynomial ideals: involutive reduction and completion."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import terms as T
from .groebner import GroebnerBasis, buchberger
from .monomial import (
    MonomialIdeal,
    MonomialPommaretBasis,
    NotQuasiStable,
    inverse_p_ordering_of,
    monomial_pommaret_complete,
    quasi_stability_breakdown,
)
from .polynomial import Polynomial
from .ring import LinearChange, Ring
from .terms import Exponent, TermOrder

log = logging.getLogger(__name__)

REVLEX = TermOrder.REVLEX

# (element index, non-multiplicative variable) -> {element index: coefficient}
Representations = dict[tuple[int, int], dict[int, Polynomial]]


class DeltaSingularError(ValueError):
    """The coordinates admit no finite Pommaret basis."""

    def __init__(self, witness: DeltaSingular):
        super().__init__(f"coordinates are delta-singular: lt I = {witness.leading_ideal}")
        self.witness = witness


class NotAPommaretBasis(ValueError):
    pass


def _require_homogeneous(F: Sequence[Polynomial]) -> None:
    for f in F:
        if not f.is_homogeneous():
            raise ValueError(f"input must be homogeneous: {f}")


@dataclass(frozen=True)
class PommaretBasis:
    """Polynomials whose leading terms form a Pommaret basis of the leading ideal.

    ``reps[(i, j)]`` is the involutive standard representation of x_j * h_i:
    a map from element index to a coefficient in the multiplicative
    variables of that element.
    """

    ring: Ring
    order: TermOrder
    elements: tuple[Polynomial, ...]
    reps: Representations = field(compare=False, repr=False)

    @classmethod
    def from_elements(cls, elements: Iterable[Polynomial], order: TermOrder = REVLEX) -> PommaretBasis:
        """Verify the local involutive criterion and record all representations."""
        elements = _canonical_order([f.monic(order) for f in elements], order)
        if not elements:
            raise NotAPommaretBasis("empty set")
        ok, reps = _closure(elements, order)
        if not ok:
            raise NotAPommaretBasis("non-multiplicative prolongations do not reduce to zero")
        return cls(elements[0].ring, order, tuple(elements), reps)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def lead_exponents(self) -> tuple[Exponent, ...]:
        return tuple(h.lead_exponent(self.order) for h in self.elements)

    def classes(self) -> list[int]:
        return [T.cls(mu) for mu in self.lead_exponents]

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_generators(self.lead_exponents, self.n)

    def monomial_basis(self) -> MonomialPommaretBasis:
        return MonomialPommaretBasis(self.n, self.lead_exponents, self.leading_ideal())

    def degree(self) -> int:
        return max(h.degree() for h in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class DeltaSingular:
    leading_ideal: MonomialIdeal
    breakdown: dict[str, bool]
    prolongation: Exponent | None = None  # a term the monomial completion keeps adding


@dataclass(frozen=True)
class CompletionOutcome:
    basis: PommaretBasis | None
    singular: DeltaSingular | None
    change: LinearChange
    groebner: GroebnerBasis | None = None

    @property
    def is_regular(self) -> bool:
        return self.basis is not None

    def unwrap(self) -> PommaretBasis:
        if self.basis is None:
            raise DeltaSingularError(self.singular)
        return self.basis


# -- involutive normal form ------------------------------------------------


class _Reducers:
    """Leading data of an involutively head-autoreduced set."""

    def __init__(self, H: Sequence[Polynomial], order: TermOrder):
        self.H = H
        self.leads = [h.lead_exponent(order) for h in H]
        self.lcs = [h.lead_coefficient(order) for h in H]
        self.index = T.InvolutiveIndex(self.leads)
        self.where = {mu: i for i, mu in enumerate(self.leads)}
        self.dicts = [h.as_dict() for h in H]

    def find(self, mu: Exponent) -> int | None:
        d = self.index.find(mu)
        return None if d is None else self.where[d]


def involutive_normal_form(
    f: Polynomial,
    H: Sequence[Polynomial] | _Reducers,
    order: TermOrder = REVLEX,
    *,
    rng: random.Random | None = None,
    with_representation: bool = False,
):
    """Reduce every term of f by involutive divisors among the leading terms of H.

    ``rng`` picks the next term to treat at random instead of the largest;
    the result does not depend on that choice when H is a Pommaret basis.
    With ``with_representation`` also returns {index: coefficient} with
    f - remainder = sum coefficient * H[index].
    """
    red = H if isinstance(H, _Reducers) else _Reducers(H, order)
    R = f.ring
    p = f.as_dict()
    rem: dict[Exponent, object] = {}
    coeffs: dict[int, dict[Exponent, object]] = {}
    key = order.key
    while p:
        mu = rng.choice(sorted(p)) if rng is not None else max(p, key=key)
        c = p.pop(mu)
        i = red.find(mu)
        if i is None:
            v = R.add(rem[mu], c) if mu in rem else c
            if v:
                rem[mu] = v
            else:
                rem.pop(mu, None)
            continue
        q = R.div(c, red.lcs[i])
        shift = T.sub(mu, red.leads[i])
        ci = coeffs.setdefault(i, {})
        v = R.add(ci[shift], q) if shift in ci else q
        if v:
            ci[shift] = v
        else:
            ci.pop(shift, None)
        lead = red.leads[i]
        for nu, a in red.dicts[i].items():
            if nu == lead:
                continue
            t = T.add(nu, shift)
            v = R.sub(p[t], R.mul(q, a)) if t in p else R.neg(R.mul(q, a))
            if v:
                p[t] = v
            else:
                p.pop(t, None)
    r = Polynomial(R, rem, _clean=True)
    if not with_representation:
        return r
    rep = {i: Polynomial(R, c, _clean=True) for i, c in coeffs.items() if c}
    return r, rep


# -- autoreduction and the local criterion -------------------------------------


def _canonical_order(H: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    pos = {mu: k for k, mu in enumerate(inverse_p_ordering_of([h.lead_exponent(order) for h in H]))}
    return sorted(H, key=lambda h: pos[h.lead_exponent(order)])


def involutive_autoreduce(F: Iterable[Polynomial], order: TermOrder = REVLEX) -> list[Polynomial]:
    """Head-reduce until no leading term involutively divides another."""
    H: list[Polynomial] = []
    for f in F:
        if f and f.monic(order) not in H:
            H.append(f.monic(order))
    while True:
        leads = [h.lead_exponent(order) for h in H]
        hit = None
        for a, mu in enumerate(leads):
            for b, nu in enumerate(leads):
                if a != b and T.involutive_divides(nu, mu) and (nu != mu or b < a):
                    hit = (a, b)
                    break
            if hit:
                break
        if hit is None:
            return H
        a, b = hit
        h, g = H[a], H[b]
        shift = T.sub(leads[a], leads[b])
        r = h - g.mul_term(shift, h.ring.div(h.lead_coefficient(order), g.lead_coefficient(order)))
        del H[a]
        if r and r.monic(order) not in H:
            H.append(r.monic(order))


def _is_autoreduced(leads: Sequence[Exponent]) -> bool:
    return all(
        not (a != b and T.involutive_divides(nu, mu))
        for a, mu in enumerate(leads)
        for b, nu in enumerate(leads)
    ) and len(set(leads)) == len(leads)


def _closure(H: Sequence[Polynomial], order: TermOrder) -> tuple[bool, Representations]:
    leads = [h.lead_exponent(order) for h in H]
    if not _is_autoreduced(leads):
        return False, {}
    red = _Reducers(H, order)
    n = H[0].ring.n
    reps: Representations = {}
    for i, h in enumerate(H):
        for j in range(T.cls(leads[i]) + 1, n + 1):
            r, rep = involutive_normal_form(
                h.mul_term(T.unit_vector(n, j)), red, order, with_representation=True
            )
            if r:
                return False, {}
            reps[(i, j)] = rep
    return True, reps


def closure_check(H: Sequence[Polynomial], order: TermOrder = REVLEX) -> bool:
    """Local involutive criterion: autoreduced leads and every x_j*h (j non-multiplicative)
    has involutive normal form zero."""
    H = [h for h in H if h]
    return bool(H) and _closure(H, order)[0]


# -- completion --------------------------------------------------------------


def default_degree_cap(G: GroebnerBasis) -> int:
    return 2 + 2 * G.max_degree()


def delta_singular_witness(lt_ideal: MonomialIdeal) -> DeltaSingular:
    res = monomial_pommaret_complete(lt_ideal)
    witness = res.witness if isinstance(res, NotQuasiStable) else None
    return DeltaSingular(lt_ideal, quasi_stability_breakdown(lt_ideal), witness)


def pommaret_complete(
    F: Iterable[Polynomial],
    order: TermOrder = REVLEX,
    degree_cap: int | None = None,
) -> CompletionOutcome:
    """Involutive completion of F.

    delta-regularity is decided beforehand through the Buchberger leading
    ideal, so the completion loop only runs when it is known to terminate.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("the zero ideal has no Pommaret basis")
    _require_homogeneous(F)
    R = F[0].ring
    G = buchberger(F, order)
    if G.elements[0].is_constant():
        raise ValueError("the unit ideal is not supported")
    lt_ideal = G.leading_ideal()
    identity = LinearChange.identity(R)
    target = monomial_pommaret_complete(lt_ideal)
    if isinstance(target, NotQuasiStable):
        witness = DeltaSingular(lt_ideal, quasi_stability_breakdown(lt_ideal), target.witness)
        return CompletionOutcome(None, witness, identity, G)
    cap = default_degree_cap(G) if degree_cap is None else degree_cap

    n = R.n
    H = involutive_autoreduce(F, order)
    done: set[tuple[Polynomial, int]] = set()
    while True:
        pending = [
            (h, j) for h in H for j in range(T.cls(h.lead_exponent(order)) + 1, n + 1)
            if (h, j) not in done
        ]
        if not pending:
            H = _canonical_order(_tail_reduce(H, order), order)
            ok, reps = _closure(H, order)
            if ok:
                break
            done.clear()
            continue
        h, j = min(
            pending,
            key=lambda p: (order.key(T.add(p[0].lead_exponent(order), T.unit_vector(n, p[1]))), p[1]),
        )
        done.add((h, j))
        r = involutive_normal_form(h.mul_term(T.unit_vector(n, j)), H, order)
        if r:
            if r.degree() > cap:
                # the leading ideal is certified quasi-stable, so growing the cap is safe
                log.info("raising completion degree cap from %d to %d", cap, r.degree())
                cap = r.degree()
            H = involutive_autoreduce(H + [r], order)
    basis = PommaretBasis(R, order, tuple(H), reps)
    if set(basis.lead_exponents) != set(target.elements):
        raise AssertionError("completion disagrees with the monomial Pommaret basis of lt I")
    return CompletionOutcome(basis, None, identity, G)


def _tail_reduce(H: list[Polynomial], order: TermOrder) -> list[Polynomial]:
    red = _Reducers(H, order)
    out = []
    for h in H:
        mu, c = h.leading_term(order)
        tail = h - Polynomial.monomial(h.ring, mu, c)
        out.append(Polynomial.monomial(h.ring, mu, c) + involutive_normal_form(tail, red, order))
    return [h.monic(order) for h in out]


def pommaret_basis(F: Iterable[Polynomial], order: TermOrder = REVLEX) -> PommaretBasis:
    """Like :func:`pommaret_complete` but raises :class:`DeltaSingularError`."""
    return pommaret_complete(F, order).unwrap()


def check_representations(H: PommaretBasis) -> None:
    """Assert that each stored representation of x_j*h_i re-expands exactly,
    uses only multiplicative variables, and does not exceed lt(x_j*h_i)."""
    order, n = H.order, H.n
    leads = H.lead_exponents
    for (i, j), rep in H.reps.items():
        prod = H.elements[i].mul_term(T.unit_vector(n, j))
        total = Polynomial.zero(H.ring)
        bound = order.key(prod.lead_exponent(order))
        for k, P in rep.items():
            mult = T.multiplicative_variables(leads[k])
            if not P.support_variables() <= mult:
                raise AssertionError(f"coefficient of h_{k} uses non-multiplicative variables")
            term = P * H.elements[k]
            if order.key(term.lead_exponent(order)) > bound:
                raise AssertionError("representation is not a standard representation")
            total = total + term
        if total != prod:
            raise AssertionError(f"representation of x{j}*h_{i} does not re-expand")
