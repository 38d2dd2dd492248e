"""Exponent vectors, the two term orders, and Pommaret division.

Exponent vectors are plain tuples of non-negative ints.  Variable indices in
the public API are 1-based: ``cls((0, 1, 2)) == 2``.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Collection, Iterable, Iterator

Exponent = tuple[int, ...]


def cls(mu: Exponent) -> int:
    """Index of the first variable occurring in ``x^mu``."""
    for i, e in enumerate(mu):
        if e:
            return i + 1
    raise ValueError("class is undefined for the zero exponent vector")


def multiplicative_variables(mu: Exponent) -> frozenset[int]:
    return frozenset(range(1, cls(mu) + 1))


def nonmultiplicative_variables(mu: Exponent) -> frozenset[int]:
    return frozenset(range(cls(mu) + 1, len(mu) + 1))


def degree(mu: Exponent) -> int:
    return sum(mu)


def divides(mu: Exponent, nu: Exponent) -> bool:
    return all(a <= b for a, b in zip(mu, nu))


def involutive_divides(mu: Exponent, nu: Exponent) -> bool:
    """True iff x^mu | x^nu and the quotient only uses x_1, ..., x_cls(mu)."""
    c = cls(mu)
    if not divides(mu, nu):
        return False
    return all(mu[i] == nu[i] for i in range(c, len(mu)))


def involutive_divisor(nu: Exponent, pool: Collection[Exponent]) -> Exponent | None:
    """Find an involutive divisor of ``nu`` in ``pool`` (a set or dict of exponents).

    Only the candidates (0, .., 0, e, nu_{c+1}, .., nu_n) with 1 <= e <= nu_c
    can divide involutively, so this costs at most deg(nu) lookups.
    """
    n = len(nu)
    for c in range(n):
        top = nu[c]
        if not top:
            continue
        prefix = (0,) * c
        tail = nu[c + 1:]
        for e in range(1, top + 1):
            mu = prefix + (e,) + tail
            if mu in pool:
                return mu
    return None


class InvolutiveIndex:
    """Exponents indexed by (class, exponents after the class) for O(n) divisor lookup.

    In an involutively autoreduced set each key holds one exponent: two with
    the same class and tail differ only in the class variable, and the
    smaller would divide the larger involutively.
    """

    __slots__ = ("_index",)

    def __init__(self, exponents: Iterable[Exponent] = ()):
        self._index: dict[tuple, tuple[int, Exponent]] = {}
        for mu in exponents:
            self.add(mu)

    @staticmethod
    def _key(mu: Exponent) -> tuple[tuple, int]:
        c = cls(mu)
        return (c, mu[c:]), mu[c - 1]

    def add(self, mu: Exponent) -> None:
        key, e = self._key(mu)
        old = self._index.get(key)
        if old is not None and old[1] != mu:
            raise ValueError(f"{old[1]} and {mu} are not involutively autoreduced")
        self._index[key] = (e, mu)

    def discard(self, mu: Exponent) -> None:
        key, _ = self._key(mu)
        if self._index.get(key, (0, None))[1] == mu:
            del self._index[key]

    def find(self, nu: Exponent) -> Exponent | None:
        index = self._index
        for c in range(len(nu)):
            e = nu[c]
            if not e:
                continue
            hit = index.get((c + 1, nu[c + 1:]))
            if hit is not None and hit[0] <= e:
                return hit[1]
        return None

    def __len__(self) -> int:
        return len(self._index)


def add(mu: Exponent, nu: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Exponent, nu: Exponent) -> Exponent:
    out = tuple(a - b for a, b in zip(mu, nu))
    if any(e < 0 for e in out):
        raise ValueError(f"{nu} does not divide {mu}")
    return out


def lcm(mu: Exponent, nu: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(mu, nu))


def gcd(mu: Exponent, nu: Exponent) -> Exponent:
    return tuple(min(a, b) for a, b in zip(mu, nu))


def unit_vector(n: int, i: int) -> Exponent:
    """Exponent of the variable x_i (1-based)."""
    return tuple(int(k == i - 1) for k in range(n))


def monomials_of_degree(n: int, d: int) -> Iterator[Exponent]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _revlex_key(mu: Exponent) -> tuple:
    # equal degree: mu < nu iff the first nonzero entry of mu - nu is positive
    return (sum(mu), tuple(-e for e in mu))


@lru_cache(maxsize=None)
def _lex_key(mu: Exponent) -> tuple:
    # reversed lex: x_n is the largest variable, compared first
    return mu[::-1]


class TermOrder(enum.Enum):
    REVLEX = "revlex"
    LEX = "lex"

    def key(self, mu: Exponent) -> tuple:
        return _revlex_key(mu) if self is TermOrder.REVLEX else _lex_key(mu)

    def max(self, exponents: Iterable[Exponent]) -> Exponent:
        return max(exponents, key=self.key)

    def sorted(self, exponents: Iterable[Exponent], descending: bool = True) -> list[Exponent]:
        return sorted(exponents, key=self.key, reverse=descending)


def compare(order: TermOrder, mu: Exponent, nu: Exponent) -> int:
    """-1, 0 or 1 as x^mu is smaller than, equal to or larger than x^nu."""
    if len(mu) != len(nu):
        raise ValueError("exponent vectors of different length")
    a, b = order.key(tuple(mu)), order.key(tuple(nu))
    return (a > b) - (a < b)


def format_monomial(mu: Exponent, names) -> str:
    parts = []
    for e, v in zip(mu, names):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts) if parts else "1"
