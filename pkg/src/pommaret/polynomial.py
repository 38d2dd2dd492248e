"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from . import terms as T
from .ring import Ring
from .terms import Exponent, TermOrder

REVLEX = TermOrder.REVLEX


class Polynomial:
    """An immutable polynomial: a map exponent -> nonzero coefficient.

    ``terms(order)`` lists the terms sorted descending; the zero polynomial
    has no terms.
    """

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Exponent, object] | Iterable = (), *, _clean=False):
        self.ring = ring
        if _clean:
            self._terms = terms
        else:
            items = terms.items() if isinstance(terms, Mapping) else terms
            acc: dict[Exponent, object] = {}
            n = ring.n
            for mu, c in items:
                mu = tuple(int(e) for e in mu)
                if len(mu) != n or any(e < 0 for e in mu):
                    raise ValueError(f"bad exponent vector {mu} for {ring}")
                c = ring.coerce(c)
                acc[mu] = ring.add(acc[mu], c) if mu in acc else c
            self._terms = {mu: c for mu, c in acc.items() if c}
        self._sorted = None
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, ring: Ring, mu: Exponent, coeff=1) -> Polynomial:
        return cls(ring, {tuple(mu): coeff})

    @classmethod
    def variable(cls, ring: Ring, i: int) -> Polynomial:
        return cls.monomial(ring, T.unit_vector(ring.n, i))

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, {(0,) * ring.n: c})

    @classmethod
    def zero(cls, ring: Ring) -> Polynomial:
        return cls(ring, {}, _clean=True)

    # -- inspection -------------------------------------------------------

    def as_dict(self) -> dict[Exponent, object]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self.terms())

    def coefficient(self, mu: Exponent):
        return self._terms.get(tuple(mu), self.ring.zero)

    def exponents(self):
        return self._terms.keys()

    def terms(self, order: TermOrder = REVLEX) -> list[tuple[Exponent, object]]:
        if order is REVLEX:
            if self._sorted is None:
                self._sorted = sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)
            return self._sorted
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lead_exponent(self, order: TermOrder = REVLEX) -> Exponent:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        if order is REVLEX and self._sorted is not None:
            return self._sorted[0][0]
        return order.max(self._terms)

    def leading_term(self, order: TermOrder = REVLEX) -> tuple[Exponent, object]:
        mu = self.lead_exponent(order)
        return mu, self._terms[mu]

    def lead_coefficient(self, order: TermOrder = REVLEX):
        return self._terms[self.lead_exponent(order)]

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(mu) for mu in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(mu) for mu in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(mu) for mu in self._terms)

    def support_variables(self) -> set[int]:
        return {i + 1 for mu in self._terms for i, e in enumerate(mu) if e}

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial) -> None:
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        self._check(other)
        R = self.ring
        out = dict(self._terms)
        for mu, c in other._terms.items():
            s = R.add(out[mu], c) if mu in out else c
            if s:
                out[mu] = s
            else:
                out.pop(mu, None)
        return Polynomial(R, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return Polynomial(R, {mu: R.neg(c) for mu, c in self._terms.items()}, _clean=True)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        R = self.ring
        c = R.coerce(c)
        if not c:
            return Polynomial.zero(R)
        return Polynomial(R, {mu: R.mul(c, a) for mu, a in self._terms.items()}, _clean=True)

    def mul_term(self, nu: Exponent, c=1) -> Polynomial:
        """Multiply by the term c * x^nu."""
        R = self.ring
        c = R.coerce(c)
        if not c:
            return Polynomial.zero(R)
        if self._terms and max(sum(mu) for mu in self._terms) + sum(nu) > R.max_degree:
            raise OverflowError(f"degree exceeds the ring's cap {R.max_degree}")
        return Polynomial(
            R, {T.add(mu, nu): R.mul(c, a) for mu, a in self._terms.items()}, _clean=True
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        R = self.ring
        if self.degree() + other.degree() > R.max_degree:
            raise OverflowError(f"degree exceeds the ring's cap {R.max_degree}")
        out: dict[Exponent, object] = {}
        for mu, a in self._terms.items():
            for nu, b in other._terms.items():
                key = T.add(mu, nu)
                p = R.mul(a, b)
                out[key] = R.add(out[key], p) if key in out else p
        return Polynomial(R, {k: v for k, v in out.items() if v}, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def monic(self, order: TermOrder = REVLEX) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(self.ring.inv(self.lead_coefficient(order)))

    def exact_divide_monomial(self, nu: Exponent) -> Polynomial:
        """Divide every term by x^nu; raises if some term is not divisible."""
        return Polynomial(self.ring, {T.sub(mu, nu): c for mu, c in self._terms.items()}, _clean=True)

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Replace x_i by ``images[i-1]`` and expand."""
        R = self.ring
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] ** e
            return powers[key]

        out = Polynomial.zero(R)
        for mu, c in self._terms.items():
            prod = Polynomial.constant(R, c)
            for i, e in enumerate(mu):
                if e:
                    prod = prod * power(i, e)
            out = out + prod
        return out

    # -- comparison, hashing, printing ------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if not self._terms:
            return other == 0
        return False

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def to_string(self, order: TermOrder = REVLEX) -> str:
        if not self._terms:
            return "0"
        R = self.ring
        out = []
        for mu, c in self.terms(order):
            if R.characteristic == 0:
                neg = c < 0
                a = -c if neg else c
            else:
                neg, a = False, c
            mono = T.format_monomial(mu, R.names)
            coeff = R.format_coefficient(a)
            if mono == "1":
                body = coeff
            elif coeff == "1":
                body = mono
            else:
                body = f"{coeff}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def monomial_exponents(polys: Iterable[Polynomial]) -> list[Exponent]:
    """Exponents of polynomials that must all be single terms."""
    out = []
    for f in polys:
        if not f.is_monomial():
            raise ValueError(f"{f} is not a monomial")
        out.append(next(iter(f.exponents())))
    return out
