"""Exact Gaussian elimination with polynomials as rows (columns = monomials)."""

from __future__ import annotations

from typing import Iterable

from .polynomial import Polynomial
from .terms import TermOrder

REVLEX = TermOrder.REVLEX


def _reduce_row(p: dict, rows: dict, ring) -> dict:
    # rows: pivot exponent -> monic row dict; each pivot appears in no other row
    for mu in [m for m in p if m in rows]:
        c = p.get(mu)
        if not c:
            continue
        for nu, a in rows[mu].items():
            v = ring.sub(p[nu], ring.mul(c, a)) if nu in p else ring.neg(ring.mul(c, a))
            if v:
                p[nu] = v
            else:
                p.pop(nu, None)
    return p


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self, ring, order: TermOrder = REVLEX):
        self.ring = ring
        self.order = order
        self.rows: dict = {}

    def add(self, f: Polynomial) -> bool:
        """Insert f; returns True iff it increased the rank."""
        R = self.ring
        p = _reduce_row(f.as_dict(), self.rows, R)
        if not p:
            return False
        piv = self.order.max(p)
        inv = R.inv(p[piv])
        p = {mu: R.mul(inv, c) for mu, c in p.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for nu, a in p.items():
                    v = R.sub(row[nu], R.mul(c, a)) if nu in row else R.neg(R.mul(c, a))
                    if v:
                        row[nu] = v
                    else:
                        row.pop(nu, None)
        self.rows[piv] = p
        return True

    def extend(self, fs: Iterable[Polynomial]) -> None:
        for f in fs:
            self.add(f)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, f: Polynomial) -> bool:
        return not _reduce_row(f.as_dict(), self.rows, self.ring)

    def basis(self) -> list[Polynomial]:
        key = self.order.key
        return [Polynomial(self.ring, dict(self.rows[piv]), _clean=True)
                for piv in sorted(self.rows, key=key, reverse=True)]


def echelon_basis(fs: Iterable[Polynomial], ring, order: TermOrder = REVLEX) -> list[Polynomial]:
    E = Echelon(ring, order)
    E.extend(fs)
    return E.basis()


def rank(fs: Iterable[Polynomial], ring) -> int:
    E = Echelon(ring)
    E.extend(fs)
    return E.rank
