"""Homological invariants read off a Pommaret basis for the reverse lexicographic order.

Every function here accepts either a :class:`~pommaret.involutive.PommaretBasis`
or a :class:`~pommaret.monomial.MonomialPommaretBasis`; only leading terms are used.
Absent maxima (the max of an empty set) are represented by ``None``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Union

from . import terms as T
from .involutive import PommaretBasis
from .monomial import MonomialIdeal, MonomialPommaretBasis, dimension
from .polynomial import Polynomial
from .terms import Exponent

AnyBasis = Union[PommaretBasis, MonomialPommaretBasis]
MaybeInt = Union[int, None]


def _leads(H: AnyBasis) -> tuple[Exponent, ...]:
    return tuple(H.lead_exponents)


def _max(values) -> MaybeInt:
    values = [v for v in values if v is not None]
    return max(values) if values else None


@dataclass(frozen=True)
class ClassDegreeCensus:
    """Number of basis elements of each (class, degree)."""

    n: int
    counts: dict[tuple[int, int], int]

    def by_class(self, k: int) -> int:
        return sum(c for (kk, _), c in self.counts.items() if kk == k)

    @property
    def marginals(self) -> tuple[int, ...]:
        """beta0_k for k = 1..n."""
        return tuple(self.by_class(k) for k in range(1, self.n + 1))

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def census(H: AnyBasis) -> ClassDegreeCensus:
    counts = Counter((T.cls(mu), T.degree(mu)) for mu in _leads(H))
    return ClassDegreeCensus(H.n, dict(sorted(counts.items())))


def basis_class(H: AnyBasis) -> int:
    """cls H, the minimal class of an element; equals depth I."""
    return min(T.cls(mu) for mu in _leads(H))


def regularity(H: AnyBasis) -> int:
    return max(T.degree(mu) for mu in _leads(H))


@dataclass(frozen=True)
class BasicInvariants:
    pd: int
    depth_quotient: int
    dim: int
    cohen_macaulay: bool
    noether_vars: tuple[int, ...]


def leading_ideal(H: AnyBasis) -> MonomialIdeal:
    return MonomialIdeal.from_generators(_leads(H), H.n)


def basic_invariants(H: AnyBasis) -> BasicInvariants:
    d = basis_class(H)
    D = dimension(leading_ideal(H))
    return BasicInvariants(
        pd=H.n - d,
        depth_quotient=d - 1,
        dim=D,
        cohen_macaulay=(D == d - 1),
        noether_vars=tuple(range(1, D + 1)),
    )


def satiety(H: AnyBasis) -> MaybeInt:
    """Largest degree of a class-1 element; None when the ideal is saturated."""
    return _max(T.degree(mu) for mu in _leads(H) if T.cls(mu) == 1)


@dataclass(frozen=True)
class SaturationResult:
    weak_basis: tuple
    basis: tuple
    saturated: bool
    unit: bool

    def pommaret_basis(self):
        """The saturation as a basis object of the same kind as the input."""
        if self.unit:
            raise ValueError("the saturation is the unit ideal")
        if self.basis and isinstance(self.basis[0], Polynomial):
            return PommaretBasis.from_elements(self.basis)
        n = len(self.basis[0])
        return MonomialPommaretBasis(n, self.basis, MonomialIdeal.from_generators(self.basis, n))


def _drop_redundant(items, lead):
    keep = []
    leads = [lead(h) for h in items]
    for a, mu in enumerate(leads):
        if not any(
            b != a and T.involutive_divides(nu, mu) and (nu != mu or b < a)
            for b, nu in enumerate(leads)
        ):
            keep.append(items[a])
    return tuple(keep)


def saturation_from_basis(H: AnyBasis) -> SaturationResult:
    """Strip the x_1-power of the leading term from each class-1 element, then
    drop elements whose leading term is involutively divisible by another."""
    leads = _leads(H)
    saturated = all(T.cls(mu) > 1 for mu in leads)
    if isinstance(H, MonomialPommaretBasis):
        weak = tuple((0,) + mu[1:] if T.cls(mu) == 1 else mu for mu in leads)
        if any(not any(mu) for mu in weak):
            return SaturationResult(weak, (), saturated, True)
        return SaturationResult(weak, _drop_redundant(weak, lambda m: m), saturated, False)
    weak = []
    for h, mu in zip(H.elements, leads):
        if T.cls(mu) == 1:
            h = h.exact_divide_monomial((mu[0],) + (0,) * (H.n - 1))
        weak.append(h)
    weak = tuple(weak)
    if any(h.is_constant() for h in weak):
        return SaturationResult(weak, (), saturated, True)
    basis = _drop_redundant(list(weak), lambda h: h.lead_exponent(H.order))
    return SaturationResult(weak, basis, saturated, False)


def q_invariants(H: AnyBasis) -> tuple[MaybeInt, ...]:
    """q_i = deg H_i - 1 where H_i are the elements of class i (None if H_i is empty)."""
    out = []
    for i in range(1, H.n + 1):
        m = _max(T.degree(mu) for mu in _leads(H) if T.cls(mu) == i)
        out.append(None if m is None else m - 1)
    return tuple(out)


def cohomology_maxima(H: AnyBasis, t: int) -> tuple[MaybeInt, MaybeInt]:
    """(reg_t, a*_t) for 0 <= t <= dim P/I."""
    D = basic_invariants(H).dim
    if not 0 <= t <= D:
        raise ValueError(f"t must lie in [0, {D}]")
    q = q_invariants(H)
    reg_t = _max(q[: t + 1])
    a_star = _max(None if q[i] is None else q[i] - i for i in range(t + 1))
    return reg_t, a_star


@dataclass(frozen=True)
class ResolutionRanks:
    total: tuple[int, ...]
    bigraded: dict[tuple[int, int], int]

    @property
    def length(self) -> int:
        return len(self.total) - 1


def resolution_ranks(H: AnyBasis) -> ResolutionRanks:
    """Ranks of the free resolution induced by the basis, total and bigraded."""
    n = H.n
    c = census(H)
    d = basis_class(H)
    total = tuple(
        sum(comb(n - k, i) * c.by_class(k) for k in range(d, n - i + 1)) for i in range(n - d + 1)
    )
    big: Counter = Counter()
    for (k, q), cnt in c.counts.items():
        for i in range(n - k + 1):
            big[(i, q + i)] += comb(n - k, i) * cnt
    return ResolutionRanks(total, dict(sorted(big.items())))


def extremal_betti(H: AnyBasis) -> list[tuple[tuple[int, int], int]]:
    """Positions and values of the extremal Betti numbers.

    Repeatedly take, among the remaining elements of maximal degree, one of
    minimal class k; that gives position (n - k, q + n - k).  Stop once k
    reaches cls H, the depth of I.
    """
    n = H.n
    pool = [(T.degree(mu), T.cls(mu)) for mu in _leads(H)]
    depth = min(k for _, k in pool)
    out = []
    while pool:
        q = max(deg for deg, _ in pool)
        k = min(kk for deg, kk in pool if deg == q)
        value = sum(1 for deg, kk in pool if deg == q and kk == k)
        out.append(((n - k, q + n - k), value))
        if k == depth:
            break
        pool = [(deg, kk) for deg, kk in pool if kk < k]
    return out


@dataclass(frozen=True)
class HilbertSeries:
    """HS_I(t) = numerator(t) / (1 - t)^n; numerator[j] is the coefficient of t^j."""

    n: int
    numerator: tuple[int, ...]
    cones: tuple[tuple[int, int], ...] = field(repr=False)  # (degree, class) per element

    def coefficients(self, max_degree: int) -> list[int]:
        """dim I_q for q = 0..max_degree."""
        out = []
        for q in range(max_degree + 1):
            out.append(sum(comb(q - deg + k - 1, k - 1) for deg, k in self.cones if q >= deg))
        return out

    def quotient_coefficients(self, max_degree: int) -> list[int]:
        """dim (P/I)_q for q = 0..max_degree."""
        return [comb(q + self.n - 1, self.n - 1) - c for q, c in enumerate(self.coefficients(max_degree))]

    def quotient_numerator(self) -> tuple[int, ...]:
        """Numerator of HS_{P/I} over (1 - t)^n."""
        out = [-c for c in self.numerator] or [0]
        out[0] += 1
        return tuple(out)


def hilbert_series(H: AnyBasis) -> HilbertSeries:
    n = H.n
    cones = tuple((T.degree(mu), T.cls(mu)) for mu in _leads(H))
    top = max(deg + n - k for deg, k in cones)
    num = [0] * (top + 1)
    for deg, k in cones:
        # t^deg (1 - t)^(n - k)
        for e in range(n - k + 1):
            num[deg + e] += (-1) ** e * comb(n - k, e)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return HilbertSeries(n, tuple(num), cones)


@dataclass(frozen=True)
class InvariantReport:
    reg: int
    pd: int
    depth_quotient: int
    dim: int
    cohen_macaulay: bool
    satiety: MaybeInt
    noether_vars: tuple[int, ...]
    q_vector: tuple[MaybeInt, ...]
    reg_t: tuple[MaybeInt, ...]
    a_star_t: tuple[MaybeInt, ...]
    resolution_ranks: ResolutionRanks
    extremal_betti: tuple[tuple[tuple[int, int], int], ...]
    census: ClassDegreeCensus

    def transferable(self) -> dict:
        """The items shared by I and lt I in delta-regular coordinates."""
        return {
            "pd": self.pd,
            "satiety": self.satiety,
            "reg": self.reg,
            "reg_t": self.reg_t,
            "a_star_t": self.a_star_t,
            "extremal_betti": self.extremal_betti,
            "depth": self.depth_quotient,
            "cohen_macaulay": self.cohen_macaulay,
        }


def invariant_report(H: AnyBasis) -> InvariantReport:
    basic = basic_invariants(H)
    maxima = [cohomology_maxima(H, t) for t in range(basic.dim + 1)]
    return InvariantReport(
        reg=regularity(H),
        pd=basic.pd,
        depth_quotient=basic.depth_quotient,
        dim=basic.dim,
        cohen_macaulay=basic.cohen_macaulay,
        satiety=satiety(H),
        noether_vars=basic.noether_vars,
        q_vector=q_invariants(H),
        reg_t=tuple(m[0] for m in maxima),
        a_star_t=tuple(m[1] for m in maxima),
        resolution_ranks=resolution_ranks(H),
        extremal_betti=tuple(extremal_betti(H)),
        census=census(H),
    )
