"""Polynomial rings over Q or a prime field, and linear changes of variables.

Variables are numbered 1..n following the reversed convention used throughout
the package: x_1 (the first declared name) is the *smallest* variable for the
reverse lexicographic order and the first candidate for a Noether
normalisation.  Standard degrevlex on (x_1, ..., x_n) corresponds to our
order on the reversed list (x_n, ..., x_1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_MAX_DEGREE = 64


def _is_prime(p: int) -> bool:
    from sympy import isprime

    return bool(isprime(p))


class Ring:
    """The ring k[x_1, ..., x_n] with k = Q (characteristic 0) or GF(p)."""

    __slots__ = ("names", "characteristic", "max_degree")

    def __init__(
        self,
        names: Sequence[str],
        characteristic: int = 0,
        max_degree: int = DEFAULT_MAX_DEGREE,
    ):
        names = tuple(str(v) for v in names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if characteristic != 0:
            if characteristic < 2 or characteristic >= 2**63 or not _is_prime(characteristic):
                raise ValueError(f"characteristic must be 0 or a prime < 2^63, got {characteristic}")
        self.names = names
        self.characteristic = int(characteristic)
        self.max_degree = max_degree

    @property
    def n(self) -> int:
        return len(self.names)

    def __repr__(self) -> str:
        field = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        return f"Ring({field}[{', '.join(self.names)}])"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.characteristic == other.characteristic
        )

    def __hash__(self) -> int:
        return hash((self.names, self.characteristic))

    # -- coefficient arithmetic -------------------------------------------
    # char 0 coefficients are Fractions, char p coefficients ints in [0, p).

    def coerce(self, c) -> Fraction | int:
        p = self.characteristic
        if p == 0:
            return Fraction(c)
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise ZeroDivisionError(f"{c} has no image in GF({p})")
            return c.numerator * pow(c.denominator, -1, p) % p
        if isinstance(c, int):
            return c % p
        return self.coerce(Fraction(c))

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def add(self, a, b):
        if self.characteristic:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a, b):
        if self.characteristic:
            return (a - b) % self.characteristic
        return a - b

    def mul(self, a, b):
        if self.characteristic:
            return a * b % self.characteristic
        return a * b

    def neg(self, a):
        if self.characteristic:
            return -a % self.characteristic
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(a, -1, self.characteristic)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def format_coefficient(self, c) -> str:
        """Exact, decimal-free text form ("p/q" or "p")."""
        if self.characteristic:
            return str(int(c))
        c = Fraction(c)
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"

    def parse_coefficient(self, text: str):
        return self.coerce(Fraction(text))


def rank_and_inverse(ring: Ring, rows: Sequence[Sequence]) -> tuple[int, list[list] | None]:
    """Gauss-Jordan on a square matrix; returns its rank and inverse (None if singular)."""
    n = len(rows)
    aug = [[ring.coerce(x) for x in row] + [ring.one if i == j else ring.zero for j in range(n)]
           for i, row in enumerate(rows)]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if aug[r][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = ring.inv(aug[rank][col])
        aug[rank] = [ring.mul(inv, x) for x in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(aug[r], aug[rank])]
        rank += 1
    if rank < n:
        return rank, None
    return rank, [row[n:] for row in aug]


@dataclass(frozen=True)
class LinearChange:
    """An invertible substitution x_i -> sum_j matrix[i][j] * x_j (indices 0-based here).

    Applying A then B to a polynomial equals applying ``A.compose(B)``.
    """

    ring: Ring
    matrix: tuple[tuple, ...]

    def __post_init__(self):
        n = self.ring.n
        m = tuple(tuple(self.ring.coerce(x) for x in row) for row in self.matrix)
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError(f"matrix must be {n}x{n}")
        object.__setattr__(self, "matrix", m)
        rank, _ = rank_and_inverse(self.ring, m)
        if rank < n:
            raise ValueError("linear change of variables must be invertible")

    @classmethod
    def identity(cls, ring: Ring) -> LinearChange:
        n = ring.n
        return cls(ring, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def elementary(cls, ring: Ring, i: int, j: int, c) -> LinearChange:
        """The move x_i -> x_i + c*x_j (1-based indices, i != j)."""
        if i == j:
            raise ValueError("elementary move needs two distinct variables")
        n = ring.n
        rows = [[int(a == b) for b in range(n)] for a in range(n)]
        rows[i - 1][j - 1] = c
        return cls(ring, tuple(tuple(r) for r in rows))

    @property
    def is_identity(self) -> bool:
        return self == LinearChange.identity(self.ring)

    def compose(self, other: LinearChange) -> LinearChange:
        R, A, B = self.ring, self.matrix, other.matrix
        n = R.n
        prod = []
        for i in range(n):
            row = []
            for j in range(n):
                s = R.zero
                for k in range(n):
                    if A[i][k] and B[k][j]:
                        s = R.add(s, R.mul(A[i][k], B[k][j]))
                row.append(s)
            prod.append(tuple(row))
        return LinearChange(R, tuple(prod))

    def inverse(self) -> LinearChange:
        _, inv = rank_and_inverse(self.ring, self.matrix)
        return LinearChange(self.ring, tuple(tuple(r) for r in inv))

    def apply(self, f):
        from .polynomial import Polynomial

        R = self.ring
        images = [
            Polynomial(R, {tuple(int(k == j) for k in range(R.n)): c
                           for j, c in enumerate(row) if c})
            for row in self.matrix
        ]
        return f.substitute(images)

    def to_strings(self) -> list[list[str]]:
        return [[self.ring.format_coefficient(c) for c in row] for row in self.matrix]
