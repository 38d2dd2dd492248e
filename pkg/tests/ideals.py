"""Shared fixture ideals."""

from pathlib import Path

from pommaret import terms as T
from pommaret.polynomial import Polynomial
from pommaret.ring import Ring

DATA = Path(__file__).parent / "data"


def ring3():
    R = Ring(("x", "y", "z"))
    return R, tuple(Polynomial.variable(R, i) for i in (1, 2, 3))


def ring2():
    R = Ring(("x", "y"))
    return R, tuple(Polynomial.variable(R, i) for i in (1, 2))


def m2_generators():
    _, (x, y, z) = ring3()
    return [z * z, y * z, y * y, x * z, x * y, x * x]


def rem44_generators():
    _, (x, y, z) = ring3()
    return [z * z - x * y, y * z, y * y, x * z, x * x]


def sharp_generators():
    _, (x, y, z) = ring3()
    return [z * z, z * y]


def x2y2_generators():
    _, (x, y) = ring2()
    return [x * x, y * y]


def random_homogeneous(rng, R, count=(1, 3), degrees=(1, 3)):
    """A few homogeneous polynomials with small nonzero integer coefficients."""
    F = []
    for _ in range(rng.randint(*count)):
        d = rng.randint(*degrees)
        mons = list(T.monomials_of_degree(R.n, d))
        sup = rng.sample(mons, rng.randint(1, min(4, len(mons))))
        F.append(Polynomial(R, {m: rng.choice([-3, -2, -1, 1, 2, 3]) for m in sup}))
    return F
