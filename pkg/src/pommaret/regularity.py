"""delta-regular coordinates and componentwise delta-regularity."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from . import terms as T
from .groebner import buchberger
from .involutive import PommaretBasis, pommaret_complete
from .linalg import echelon_basis
from .monomial import MonomialIdeal, is_quasi_stable
from .polynomial import Polynomial
from .ring import LinearChange
from .terms import TermOrder

log = logging.getLogger(__name__)

REVLEX = TermOrder.REVLEX

Predicate = Callable[[Sequence[Polynomial]], bool]


class RegularizationError(RuntimeError):
    """No accepted coordinates were found within the search budget."""


def is_delta_regular(F: Sequence[Polynomial], order: TermOrder = REVLEX) -> bool:
    """A finite Pommaret basis exists iff lt I is quasi-stable."""
    return is_quasi_stable(buchberger(F, order).leading_ideal())


def class_histogram(I: MonomialIdeal) -> tuple[int, ...]:
    """Counts of minimal generators by class, from class n down to 1."""
    counts = [0] * I.n
    for c in I.generator_classes():
        counts[I.n - c] += 1
    return tuple(counts)


def component_ideal(F: Sequence[Polynomial], d: int, order: TermOrder = REVLEX) -> list[Polynomial]:
    """A basis of the degree-d component I_d, as an echelon form."""
    G = buchberger(F, order)
    R = G.ring
    gens = []
    for g in G.elements:
        k = d - g.degree()
        if k < 0:
            continue
        for m in T.monomials_of_degree(R.n, k):
            gens.append(g.mul_term(m))
    return echelon_basis(gens, R, order)


def is_componentwise_delta_regular(F: Sequence[Polynomial], order: TermOrder = REVLEX) -> bool:
    """delta-regular, and every component ideal <I_d> up to reg I is delta-regular too."""
    outcome = pommaret_complete(F, order)
    if not outcome.is_regular:
        return False
    H = outcome.basis
    reg = H.degree()
    low = min(g.degree() for g in outcome.groebner.elements)
    return all(is_delta_regular(component_ideal(F, d, order), order) for d in range(low, reg + 1))


@dataclass(frozen=True)
class RegularCoordinates:
    change: LinearChange
    generators: tuple[Polynomial, ...]
    basis: PommaretBasis
    strategy: str  # "identity", "deterministic" or "random"


def _histogram_of(F: Sequence[Polynomial], order: TermOrder) -> tuple[int, ...]:
    return class_histogram(buchberger(F, order).leading_ideal())


def _sweep(F, order, accept, max_coefficient):
    R = F[0].ring
    n = R.n
    change = LinearChange.identity(R)
    current = list(F)
    best = _histogram_of(current, order)
    for _ in range(n * n):
        improved = False
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                for c in range(1, max_coefficient + 1):
                    move = LinearChange.elementary(R, i, j, c)
                    cand = [move.apply(f) for f in current]
                    h = _histogram_of(cand, order)
                    if h > best:
                        current, best, improved = cand, h, True
                        change = change.compose(move)
                        log.debug("kept x%d -> x%d + %d*x%d, histogram %s", i, i, c, j, h)
                        if accept(current):
                            return change, current
                        break
        if not improved:
            return None
    return None


def _random_upper_unitriangular(R, rng: random.Random, bound: int) -> LinearChange:
    n = R.n
    rows = [[R.one if i == j else (R.coerce(rng.randint(-bound, bound)) if j > i else R.zero)
             for j in range(n)] for i in range(n)]
    return LinearChange(R, rows)


def find_delta_regular_coordinates(
    F: Sequence[Polynomial],
    order: TermOrder = REVLEX,
    *,
    seed: int = 0,
    accept: Predicate | None = None,
    max_coefficient: int = 3,
    trials: int = 20,
    entry_bound: int = 10,
    strategy: str = "auto",
) -> RegularCoordinates:
    """Search for a linear change after which ``accept`` holds (default: delta-regularity).

    First a deterministic sweep of elementary moves x_i -> x_i + c*x_j, keeping
    a move only when the class histogram of lt I strictly improves; then seeded
    random upper unitriangular changes.
    """
    F = [f for f in F if f]
    if not F:
        raise ValueError("empty generating set")
    if accept is None:
        accept = lambda G: is_delta_regular(G, order)  # noqa: E731
    R = F[0].ring
    if accept(F):
        return RegularCoordinates(LinearChange.identity(R), tuple(F), pommaret_complete(F, order).unwrap(), "identity")
    if strategy in ("auto", "deterministic"):
        found = _sweep(F, order, accept, max_coefficient)
        if found is not None:
            change, G = found
            return RegularCoordinates(change, tuple(G), pommaret_complete(G, order).unwrap(), "deterministic")
    if strategy in ("auto", "random"):
        for t in range(trials):
            rng = random.Random(seed * 1_000_003 + t)
            change = _random_upper_unitriangular(R, rng, entry_bound)
            G = [change.apply(f) for f in F]
            if accept(G):
                return RegularCoordinates(change, tuple(G), pommaret_complete(G, order).unwrap(), "random")
    raise RegularizationError(
        f"no accepted coordinates after the sweep and {trials} random trials (seed {seed})"
    )
