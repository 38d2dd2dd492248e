"""Reference computations for the tests, deliberately independent of the package.

Betti numbers of monomial ideals come from Hochster's formula on the upper
Koszul simplicial complexes; Groebner bases come from sympy; everything else
is brute-force enumeration.
"""

from __future__ import annotations

import itertools
from math import comb

import sympy


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    return [m for m in itertools.product(range(d + 1), repeat=n) if sum(m) == d]


def in_ideal(gens, m) -> bool:
    return any(all(a <= b for a, b in zip(g, m)) for g in gens)


def minimal(gens):
    gens = set(map(tuple, gens))
    return sorted(g for g in gens if not any(h != g and all(a <= b for a, b in zip(h, g)) for h in gens))


def hilbert_count(gens, n: int, q: int) -> int:
    return sum(in_ideal(gens, m) for m in monomials(n, q))


def _rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def _reduced_homology_dims(faces) -> dict[int, int]:
    """Reduced homology over Q of a simplicial complex given by all of its faces (incl. the empty one)."""
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for k in by_dim:
        by_dim[k].sort()
    top = max(by_dim) if by_dim else -2

    def boundary(k):
        # C_k -> C_{k-1}
        rows_f = by_dim.get(k - 1, [])
        cols_f = by_dim.get(k, [])
        index = {f: i for i, f in enumerate(rows_f)}
        M = [[0] * len(cols_f) for _ in rows_f]
        for c, f in enumerate(cols_f):
            for pos in range(len(f)):
                g = f[:pos] + f[pos + 1:]
                M[index[g]][c] += (-1) ** pos
        return M

    ranks = {k: _rank(boundary(k)) if k >= 0 and by_dim.get(k) and by_dim.get(k - 1) else 0 for k in range(-1, top + 2)}
    out = {}
    for k in range(-1, top + 1):
        dim_k = len(by_dim.get(k, []))
        h = dim_k - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k] = h
    return out


def betti_table(gens, n: int) -> dict[tuple[int, int], int]:
    """Minimal graded Betti numbers beta_{i,j} of the ideal (as a module)."""
    gens = minimal(gens)
    lcms = set()
    for r in range(1, len(gens) + 1):
        for S in itertools.combinations(gens, r):
            lcms.add(tuple(max(c) for c in zip(*S)))
    table: dict[tuple[int, int], int] = {}
    for alpha in lcms:
        support = [k for k in range(n) if alpha[k]]
        faces = []
        for r in range(len(support) + 1):
            for F in itertools.combinations(support, r):
                m = tuple(alpha[k] - (1 if k in F else 0) for k in range(n))
                if in_ideal(gens, m):
                    faces.append(F)
        if not faces:
            continue
        for k, h in _reduced_homology_dims(faces).items():
            key = (k + 1, sum(alpha))
            table[key] = table.get(key, 0) + h
    return dict(sorted(table.items()))


def extremal_from_table(table) -> list[tuple[tuple[int, int], int]]:
    """Nonzero beta_{i,j} with beta_{k,l} = 0 whenever k >= i and l > j."""
    out = []
    for (i, j), v in table.items():
        if v and not any(w and k >= i and l > j for (k, l), w in table.items()):
            out.append(((i, j), v))
    return sorted(out, key=lambda p: (-p[0][1], p[0][0]))


def eliahou_kervaire(gens, n: int) -> dict[tuple[int, int], int]:
    """Betti numbers of a stable ideal; with x_1 smallest, a generator of class k contributes C(n-k, i)."""
    table: dict[tuple[int, int], int] = {}
    for g in minimal(gens):
        k = next(i for i, e in enumerate(g) if e) + 1
        for i in range(n - k + 1):
            key = (i, sum(g) + i)
            table[key] = table.get(key, 0) + comb(n - k, i)
    return dict(sorted(table.items()))


def q_invariant(gens, n: int, i: int, bound: int):
    """max{q : (J : x_i)_q != J_q} with J = I + <x_1..x_{i-1}>, by enumeration (None if empty)."""
    J = list(gens) + [tuple(int(k == j) for k in range(n)) for j in range(i - 1)]
    best = None
    for q in range(bound + 1):
        for m in monomials(n, q):
            if not in_ideal(J, m):
                xm = tuple(e + (k == i - 1) for k, e in enumerate(m))
                if in_ideal(J, xm):
                    best = q
                    break
    return best


def saturation_gens(gens, n: int):
    """I : m^infinity by iterating I : m until it stabilizes."""
    cur = minimal(gens)
    while True:
        # I : m is the intersection of the I : x_k
        colons = [minimal([tuple(max(e - (j == k), 0) for j, e in enumerate(g)) for g in cur]) for k in range(n)]
        inter = colons[0]
        for C in colons[1:]:
            inter = minimal(tuple(max(a, b) for a, b in zip(g, h)) for g in inter for h in C)
        if sorted(inter) == sorted(cur):
            return cur
        cur = inter


def satiety(gens, n: int, bound: int):
    """Least s with I_q = (I^sat)_q for all q >= s (checked up to bound); None if I is saturated."""
    sat = saturation_gens(gens, n)
    differ = [q for q in range(bound + 1) if hilbert_count(gens, n, q) != hilbert_count(sat, n, q)]
    return None if not differ else max(differ) + 1


def sympy_leading_exponents(polys, names) -> list[tuple[int, ...]]:
    """Leading exponents (in x_1..x_n order) of the reduced Groebner basis from sympy,
    using standard degrevlex on the reversed variable list."""
    syms = sympy.symbols(names)
    rev = list(reversed(syms))
    exprs = [sympy.sympify(p, locals={str(s): s for s in syms}) for p in polys]
    G = sympy.groebner(exprs, *rev, order="grevlex")
    out = []
    for g in G.exprs:
        lm = sympy.Poly(g, *rev).monoms(order="grevlex")[0]
        out.append(tuple(reversed(lm)))
    return sorted(out)
