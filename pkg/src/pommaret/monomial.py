"""Monomial ideals: colon ideals, saturation, quasi-stability, Pommaret bases.

Monomial ideals are kept by their minimal generators (exponent tuples).  The
unit ideal is a flag, never the generator 1: class and involutive division are
undefined for the zero exponent.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from . import terms as T
from .terms import Exponent, TermOrder


def _minimalize(gens: Iterable[Exponent]) -> tuple[Exponent, ...]:
    uniq = sorted(set(gens), key=lambda m: (sum(m), m))
    kept: list[Exponent] = []
    for m in uniq:
        if not any(T.divides(g, m) for g in kept):
            kept.append(m)
    return tuple(sorted(kept, key=TermOrder.REVLEX.key, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Exponent, ...] = ()
    unit: bool = False

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
        gens = [tuple(int(e) for e in g) for g in gens]
        if n is None:
            if not gens:
                raise ValueError("cannot infer the number of variables of the zero ideal")
            n = len(gens[0])
        for g in gens:
            if len(g) != n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
            if not any(g):
                raise ValueError("generator 1 given: the unit ideal is not a supported input")
        return cls(n, _minimalize(gens))

    @classmethod
    def unit_ideal(cls, n: int) -> MonomialIdeal:
        return cls(n, (), True)

    @classmethod
    def _from_colon(cls, gens: Iterable[Exponent], n: int) -> MonomialIdeal:
        gens = list(gens)
        if any(not any(g) for g in gens):
            return cls.unit_ideal(n)
        return cls(n, _minimalize(gens))

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.gens

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.unit and bool(self.gens)

    def _require_proper(self) -> None:
        if not self.is_proper_nonzero:
            raise ValueError("operation needs a proper nonzero monomial ideal")

    def contains(self, mu: Exponent) -> bool:
        return self.unit or any(T.divides(g, mu) for g in self.gens)

    __contains__ = contains

    def issubset(self, other: MonomialIdeal) -> bool:
        if other.unit:
            return True
        if self.unit:
            return False
        return all(other.contains(g) for g in self.gens)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def max_exponents(self) -> Exponent:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.n))

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        if self.unit or other.unit:
            return MonomialIdeal.unit_ideal(self.n)
        return MonomialIdeal(self.n, _minimalize(self.gens + other.gens))

    def intersection(self, other: MonomialIdeal) -> MonomialIdeal:
        if self.unit:
            return other
        if other.unit:
            return self
        return MonomialIdeal(self.n, _minimalize(T.lcm(a, b) for a in self.gens for b in other.gens))

    def colon_monomial(self, mu: Exponent) -> MonomialIdeal:
        """I : x^mu, generated by g / gcd(g, mu)."""
        if self.unit:
            return self
        return MonomialIdeal._from_colon((tuple(max(a - b, 0) for a, b in zip(g, mu)) for g in self.gens), self.n)

    def colon_variable(self, k: int) -> MonomialIdeal:
        return self.colon_monomial(T.unit_vector(self.n, k))

    def with_variables(self, ks: Iterable[int]) -> MonomialIdeal:
        """The ideal <I, x_k for k in ks>."""
        extra = MonomialIdeal(self.n, _minimalize(T.unit_vector(self.n, k) for k in ks))
        return self + extra

    def generator_classes(self) -> list[int]:
        return [T.cls(g) for g in self.gens]

    def __str__(self) -> str:
        if self.unit:
            return "<1>"
        names = [f"x{i + 1}" for i in range(self.n)]
        return "<" + ", ".join(T.format_monomial(g, names) for g in self.gens) + ">"


def minimal_generators(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    return MonomialIdeal.from_generators(gens, n)


def colon_by_variable_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    """I : x_k^infinity, by deleting x_k from every minimal generator."""
    if I.unit:
        return I
    return MonomialIdeal._from_colon(
        (g[: k - 1] + (0,) + g[k:] for g in I.gens), I.n
    )


def colon_by_ideal_power(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J^infinity for J generated by variables, by iterating I : J to a fixpoint."""
    if J.unit or J.is_zero:
        raise ValueError("J must be a proper nonzero ideal generated by variables")
    variables = []
    for g in J.gens:
        if sum(g) != 1:
            raise ValueError("saturation is only supported by ideals generated by variables")
        variables.append(T.cls(g))
    current = I
    while True:
        nxt = None
        for k in variables:
            q = current.colon_variable(k)
            nxt = q if nxt is None else nxt.intersection(q)
        if nxt == current:
            return current
        current = nxt


def variables_ideal(n: int, ks: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, _minimalize(T.unit_vector(n, k) for k in ks))


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    """I : m^infinity for the homogeneous maximal ideal m."""
    return colon_by_ideal_power(I, variables_ideal(I.n, range(1, I.n + 1)))


def dimension(I: MonomialIdeal) -> int:
    """Krull dimension of P/I: the largest set of variables containing no minimal generator."""
    if I.unit:
        return -1
    n = I.n
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.gens]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            s = frozenset(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0  # pragma: no cover - the empty set always qualifies


def pure_power_profile(I: MonomialIdeal) -> list[int | None]:
    """For each variable, the least e with x_k^e in I, or None."""
    out: list[int | None] = [None] * I.n
    for g in I.gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            i = support[0]
            out[i] = g[i] if out[i] is None else min(out[i], g[i])
    return out


def quasi_stable_dimension(I: MonomialIdeal) -> int:
    """Number of variables without a pure power in I (equals dim P/I when I is quasi-stable)."""
    return sum(e is None for e in pure_power_profile(I))


def default_completion_cap(I: MonomialIdeal) -> int:
    return 2 * I.max_degree() * I.n


# -- Pommaret bases of monomial ideals -------------------------------------


@dataclass(frozen=True)
class MonomialPommaretBasis:
    """Terms whose multiplicative cones partition the ideal they generate."""

    n: int
    elements: tuple[Exponent, ...]
    ideal: MonomialIdeal = field(compare=False)

    @property
    def lead_exponents(self) -> tuple[Exponent, ...]:
        return self.elements

    def involutive_divisor(self, nu: Exponent) -> Exponent | None:
        index = self.__dict__.get("_index")
        if index is None:
            index = T.InvolutiveIndex(self.elements)
            object.__setattr__(self, "_index", index)
        return index.find(nu)

    def count_involutive_divisors(self, nu: Exponent) -> int:
        return sum(T.involutive_divides(h, nu) for h in self.elements)


@dataclass(frozen=True)
class NotQuasiStable:
    """Completion hit its degree cap; ``witness`` is the first element beyond it."""

    ideal: MonomialIdeal
    cap: int
    witness: Exponent
    partial: tuple[Exponent, ...]


def _completion_priority(mu: Exponent) -> tuple:
    return (sum(mu), T.cls(mu), TermOrder.LEX.key(mu))


def monomial_pommaret_complete(
    I: MonomialIdeal, degree_cap: int | None = None
) -> MonomialPommaretBasis | NotQuasiStable:
    """Involutive completion of the minimal generators.

    Non-multiplicative prolongations lacking an involutive divisor are added
    lowest degree first, then lowest class, then lex.
    """
    I._require_proper()
    cap = default_completion_cap(I) if degree_cap is None else degree_cap
    if cap < I.max_degree():
        raise ValueError("degree cap below the maximal generator degree")
    n = I.n
    # Starting from minimal generators nothing added can divide an element
    # already present (it would contradict minimality or the degree order),
    # so the set stays involutively autoreduced without any removals.
    H = T.InvolutiveIndex(I.gens)
    elements = list(I.gens)
    heap: list = []

    def push(h: Exponent) -> None:
        for j in range(T.cls(h) + 1, n + 1):
            p = T.add(h, T.unit_vector(n, j))
            heapq.heappush(heap, (_completion_priority(p), p))

    for h in elements:
        push(h)
    while heap:
        _, p = heapq.heappop(heap)
        if H.find(p) is not None:
            continue
        if sum(p) > cap:
            return NotQuasiStable(I, cap, p, tuple(sorted(elements, key=_completion_priority)))
        H.add(p)
        elements.append(p)
        push(p)
    return MonomialPommaretBasis(n, tuple(inverse_p_ordering_of(elements)), I)


def inverse_p_ordering_of(elements: Iterable[Exponent]) -> list[Exponent]:
    """Higher class first; within a class, lexicographically larger first."""
    return sorted(elements, key=lambda m: (T.cls(m), TermOrder.LEX.key(m)), reverse=True)


def inverse_p_ordering(H: MonomialPommaretBasis) -> list[Exponent]:
    return inverse_p_ordering_of(H.elements)


def is_involutively_complete(elements: Iterable[Exponent]) -> bool:
    """Local criterion on terms: autoreduced and all prolongations involutively divisible."""
    H = set(elements)
    if not H:
        return False
    for h in H:
        if any(g != h and T.involutive_divides(g, h) for g in H):
            return False
    n = len(next(iter(H)))
    return all(
        T.involutive_divisor(T.add(h, T.unit_vector(n, j)), H) is not None
        for h in H
        for j in range(T.cls(h) + 1, n + 1)
    )


# -- P-graph ---------------------------------------------------------------


@dataclass(frozen=True)
class PGraph:
    vertices: tuple[Exponent, ...]
    edges: tuple[tuple[Exponent, Exponent, int], ...]  # (source, target, variable index)

    def successors(self, h: Exponent) -> list[Exponent]:
        return [t for s, t, _ in self.edges if s == h]

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for _, t, _ in self.edges:
            indeg[t] += 1
        stack = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for t in self.successors(v):
                indeg[t] -= 1
                if indeg[t] == 0:
                    stack.append(t)
        return seen == len(self.vertices)


def p_graph(H: MonomialPommaretBasis) -> PGraph:
    n = H.n
    edges = []
    for h in H.elements:
        for j in range(T.cls(h) + 1, n + 1):
            target = H.involutive_divisor(T.add(h, T.unit_vector(n, j)))
            if target is None:
                raise ValueError(f"basis is not complete: x{j}*{h} has no involutive divisor")
            edges.append((h, target, j))
    return PGraph(tuple(H.elements), tuple(edges))


# -- linear quotients ------------------------------------------------------


@dataclass(frozen=True)
class ColonRow:
    index: int  # 1-based position in the ordered list
    element: Exponent
    colon: MonomialIdeal
    variables: frozenset[int] | None  # set of variables if the colon is generated by variables
    nonmultiplicative: frozenset[int]

    @property
    def linear(self) -> bool:
        return self.variables is not None

    @property
    def matches_nonmultiplicative(self) -> bool:
        return self.variables == self.nonmultiplicative


@dataclass(frozen=True)
class LinearQuotientsReport:
    rows: tuple[ColonRow, ...]

    @property
    def has_linear_quotients(self) -> bool:
        return all(r.linear for r in self.rows[1:])

    @property
    def colon_identity_holds(self) -> bool:
        return all(r.matches_nonmultiplicative for r in self.rows)


def linear_quotients_check(ordered: Sequence[Exponent]) -> LinearQuotientsReport:
    ordered = [tuple(m) for m in ordered]
    if len(set(ordered)) != len(ordered):
        raise ValueError("elements must be distinct")
    rows = []
    for k, m in enumerate(ordered):
        n = len(m)
        if k == 0:
            colon = MonomialIdeal(n)
        else:
            colon = MonomialIdeal._from_colon(
                (tuple(max(a - b, 0) for a, b in zip(g, m)) for g in ordered[:k]), n
            )
        if colon.unit:
            variables = None
        elif all(sum(g) == 1 for g in colon.gens):
            variables = frozenset(T.cls(g) for g in colon.gens)
        else:
            variables = None
        rows.append(ColonRow(k + 1, m, colon, variables, T.nonmultiplicative_variables(m)))
    return LinearQuotientsReport(tuple(rows))


# -- stability and quasi-stability -------------------------------------------


def is_stable(I: MonomialIdeal) -> bool:
    """Exchange condition x_i * g / x_cls(g) in I on the minimal generators."""
    I._require_proper()
    n = I.n
    for g in I.gens:
        k = T.cls(g)
        for i in range(k + 1, n + 1):
            m = list(g)
            m[k - 1] -= 1
            m[i - 1] += 1
            if not I.contains(tuple(m)):
                return False
    return True


def _qs_chain(I: MonomialIdeal) -> bool:
    D = dimension(I)
    profile = pure_power_profile(I)
    if any(profile[k - 1] is None for k in range(D + 1, I.n + 1)):
        return False
    sats = [colon_by_variable_power(I, k) for k in range(1, D + 1)]
    return all(a.issubset(b) for a, b in zip(sats, sats[1:]))


def _qs_colon_eq(I: MonomialIdeal) -> bool:
    n = I.n
    for k in range(1, n + 1):
        lhs = colon_by_variable_power(I, k)
        rhs = colon_by_ideal_power(I, variables_ideal(n, range(k, n + 1)))
        if lhs != rhs:
            return False
    return True


def _qs_combinatorial(I: MonomialIdeal, s: int) -> bool:
    n = I.n
    for g in I.gens:
        for i in range(1, n):
            for r in range(1, g[i - 1] + 1):
                base = list(g)
                base[i - 1] -= r
                for j in range(i + 1, n + 1):
                    m = list(base)
                    m[j - 1] += s
                    if not I.contains(tuple(m)):
                        return False
    return True


def _is_nonzerodivisor(J: MonomialIdeal, k: int) -> bool:
    """x_k is a nonzerodivisor on P/J iff every generator of J : x_k lies in J."""
    return J.colon_variable(k).issubset(J)


def _qs_zero_divisor(I: MonomialIdeal) -> bool:
    D = dimension(I)
    if not _is_nonzerodivisor(saturation(I), 1):
        return False
    for k in range(1, D):
        J = saturation(I.with_variables(range(1, k + 1)))
        if not _is_nonzerodivisor(J, k + 1):
            return False
    return True


QUASI_STABILITY_METHODS = ("chain", "colon-eq", "combinatorial", "zero-divisor", "completion")


def is_quasi_stable(I: MonomialIdeal, method: str = "chain", degree_cap: int | None = None) -> bool:
    I._require_proper()
    cap = default_completion_cap(I) if degree_cap is None else degree_cap
    if method == "chain":
        return _qs_chain(I)
    if method == "colon-eq":
        return _qs_colon_eq(I)
    if method == "combinatorial":
        # x_j^s m in I is monotone in s, and s = max generator degree already suffices
        return _qs_combinatorial(I, max(cap, I.max_degree()))
    if method == "zero-divisor":
        return _qs_zero_divisor(I)
    if method == "completion":
        return isinstance(monomial_pommaret_complete(I, cap), MonomialPommaretBasis)
    raise ValueError(f"unknown method {method!r}; expected one of {QUASI_STABILITY_METHODS}")


def quasi_stability_breakdown(I: MonomialIdeal) -> dict[str, bool]:
    return {m: is_quasi_stable(I, m) for m in QUASI_STABILITY_METHODS}


def associated_primes_bruteforce(I: MonomialIdeal, degree_bound: int | None = None) -> set[frozenset[int]]:
    """Primes <x_S> arising as I : w for monomials w outside I.

    Witnesses w range over the box bounded by the maximal generator exponents
    (larger exponents give the same colon), optionally cut at ``degree_bound``.
    """
    I._require_proper()
    box = I.max_exponents()
    primes: set[frozenset[int]] = set()
    for w in itertools.product(*(range(b + 1) for b in box)):
        if degree_bound is not None and sum(w) > degree_bound:
            continue
        if I.contains(w):
            continue
        q = I.colon_monomial(w)
        if all(sum(g) == 1 for g in q.gens):
            primes.add(frozenset(T.cls(g) for g in q.gens))
    return primes


def is_tail_prime(S: frozenset[int], n: int) -> bool:
    """Whether <x_S> = <x_j, ..., x_n> for some j."""
    return bool(S) and S == frozenset(range(min(S), n + 1))


# -- counting ----------------------------------------------------------------


def count_ideal_monomials(I: MonomialIdeal, q: int) -> int:
    return sum(I.contains(m) for m in T.monomials_of_degree(I.n, q))


def cone_count(h: Exponent, q: int) -> int:
    """Degree-q monomials in k[x_1..x_cls(h)] * x^h."""
    d = q - sum(h)
    if d < 0:
        return 0
    c = T.cls(h)
    return comb(d + c - 1, c - 1)
