"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``);
the terminal summary prints one PASS/FAIL line per criterion.
"""

import random
from functools import lru_cache
from math import comb

import pytest

import oracles
from ideals import m2_generators, random_homogeneous, rem44_generators, ring3, sharp_generators, x2y2_generators
from pommaret.complin import (
    betti_bound_check,
    gin_rank_comparison,
    gin_sample,
    is_componentwise_linear,
    minimal_resolution_test,
)
from pommaret.groebner import buchberger
from pommaret.involutive import PommaretBasis, closure_check, involutive_normal_form, pommaret_basis, pommaret_complete
from pommaret.invariants import (
    basic_invariants,
    extremal_betti,
    hilbert_series,
    invariant_report,
    q_invariants,
    regularity,
    resolution_ranks,
    satiety,
)
from pommaret.monomial import (
    QUASI_STABILITY_METHODS,
    MonomialIdeal,
    associated_primes_bruteforce,
    inverse_p_ordering,
    is_quasi_stable,
    is_stable,
    is_tail_prime,
    linear_quotients_check,
    monomial_pommaret_complete,
    p_graph,
    quasi_stability_breakdown,
)
from pommaret.polynomial import Polynomial
from pommaret.regularity import find_delta_regular_coordinates

X2, XY, XZ, Y2, YZ, Z2 = (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)


@lru_cache(maxsize=None)
def transfer_instances(count=200, seed=2024):
    """Random homogeneous ideals in k[x,y,z] of degree <= 3, in delta-regular coordinates."""
    R, _ = ring3()
    rng = random.Random(seed)
    out = []
    for k in range(count):
        F = random_homogeneous(rng, R, count=(1, 3), degrees=(1, 3))
        out.append(find_delta_regular_coordinates(F, seed=k))
    return tuple(out)


@pytest.mark.acceptance(1, "square of the maximal ideal: basis, P-graph, inverse P-ordering, colons")
def test_criterion_1_square_of_maximal_ideal():
    R, (x, y, z) = ring3()
    F = [z * z, y * z, y * y, x * z, x * y, x * x]
    H = PommaretBasis.from_elements(F)
    assert set(H.elements) == set(F)
    mono = monomial_pommaret_complete(MonomialIdeal.from_generators([Z2, YZ, Y2, XZ, XY, X2]))
    h = {1: Z2, 2: YZ, 3: Y2, 4: XZ, 5: XY, 6: X2}
    assert inverse_p_ordering(mono) == [h[i] for i in range(1, 7)]
    expected = {(6, 5), (6, 4), (5, 3), (5, 2), (4, 2), (4, 1), (3, 2), (2, 1)}
    edges = {(a, b) for a, b, _ in p_graph(mono).edges}
    assert edges == {(h[s], h[t]) for s, t in expected}
    rows = linear_quotients_check(inverse_p_ordering(mono))
    assert rows.colon_identity_holds
    assert all(r.matches_nonmultiplicative for r in rows.rows)


@pytest.mark.acceptance(2, "completion adds x^2 y; gin sample is <z^2,yz,y^2,xz,xy,x^3>")
def test_criterion_2_completion_and_gin():
    F = rem44_generators()
    H = pommaret_complete(F).unwrap()
    extra = [h for h in H.elements if h not in set(F)]
    assert len(extra) == 1 and extra[0].lead_exponent() == (2, 1, 0)
    s = gin_sample(F, trials=16, seed=0)
    assert s.unanimous and sum(s.votes.values()) == 16
    assert s.candidate == MonomialIdeal.from_generators([Z2, YZ, Y2, XZ, XY, (3, 0, 0)])
    assert is_quasi_stable(s.candidate) and all(quasi_stability_breakdown(s.candidate).values())
    assert s.stable and is_stable(s.candidate)


@pytest.mark.acceptance(3, "eight invariants transfer from I to lt I on 200 random ideals")
def test_criterion_3_transfer():
    instances = transfer_instances()
    assert len(instances) >= 200
    for rc in instances:
        lt = buchberger(list(rc.generators)).leading_ideal()
        mono = monomial_pommaret_complete(lt)
        a = invariant_report(rc.basis).transferable()
        b = invariant_report(mono).transferable()
        assert a == b, (rc.generators, a, b)
        assert len(a) == 8


@pytest.mark.acceptance(4, "quasi-stability methods agree on 1000 monomial ideals; primes are tail primes")
def test_criterion_4_quasi_stability_agreement():
    rng = random.Random(4)
    verdicts = {True: 0, False: 0}
    for _ in range(1000):
        n = rng.randint(2, 4)
        gens = []
        if rng.random() < 0.5:
            # pure powers of every variable push towards quasi-stable instances
            for j in range(n):
                e = [0] * n
                e[j] = rng.randint(1, 6)
                gens.append(tuple(e))
        for _ in range(rng.randint(1, 4)):
            e = [0] * n
            for _ in range(rng.randint(1, 6)):
                e[rng.randrange(n)] += 1
            gens.append(tuple(e))
        I = MonomialIdeal.from_generators(gens)
        b = quasi_stability_breakdown(I)
        assert set(b) == set(QUASI_STABILITY_METHODS)
        assert len(set(b.values())) == 1, (gens, b)
        qs = b["chain"]
        verdicts[qs] += 1
        if qs:
            assert all(is_tail_prime(P, n) for P in associated_primes_bruteforce(I)), gens
    assert verdicts[True] >= 100 and verdicts[False] >= 100


@pytest.mark.acceptance(5, "invariant goldens for <x^2,y^2>, m^2 and <z^2,zy>")
def test_criterion_5_goldens():
    R2 = x2y2_generators()[0].ring
    H = pommaret_basis(x2y2_generators())
    x, y = (Polynomial.variable(R2, i) for i in (1, 2))
    assert set(H.elements) == {x * x, x * x * y, y * y}
    b = basic_invariants(H)
    assert (regularity(H), b.pd, b.depth_quotient, satiety(H)) == (3, 1, 0, 3)
    assert q_invariants(H) == (2, 1)
    assert resolution_ranks(H).total == (3, 2)
    assert extremal_betti(H) == [((1, 4), 1)]
    assert not is_stable(H.leading_ideal())
    assert not is_componentwise_linear(x2y2_generators()).verdict

    M = pommaret_basis(m2_generators())
    assert regularity(M) == 2
    assert resolution_ranks(M).total == (6, 8, 3)
    assert extremal_betti(M) == [((2, 4), 3)]
    assert is_componentwise_linear(m2_generators()).verdict
    p = basic_invariants(M).pd
    assert [comb(p + 1, i + 1) for i in range(p + 1)] == [3, 3, 1]
    assert betti_bound_check(M)

    S = pommaret_basis(sharp_generators())
    assert resolution_ranks(S).total == (2, 1)
    p = basic_invariants(S).pd
    assert resolution_ranks(S).total == tuple(comb(p + 1, i + 1) for i in range(p + 1))
    assert is_componentwise_linear(sharp_generators()).verdict and betti_bound_check(S)


@pytest.mark.acceptance(6, "Hilbert counts, alternating sums, normal form order, Buchberger lt")
def test_criterion_6_conservation():
    fixtures = [pommaret_basis(f()) for f in (m2_generators, x2y2_generators, rem44_generators, sharp_generators)]
    fixtures += [rc.basis for rc in transfer_instances()[:40]]
    for H in fixtures:
        top = regularity(H) + 3
        lt = buchberger(list(H.elements)).lead_exponents()
        hs = hilbert_series(H)
        assert hs.coefficients(top) == [oracles.hilbert_count(lt, H.n, q) for q in range(top + 1)]
        big = resolution_ranks(H).bigraded
        for d, c in enumerate(hs.numerator):
            assert c == sum((-1) ** i * v for (i, j), v in big.items() if j == d)
        assert all(j < len(hs.numerator) for _, j in big)

    rng = random.Random(6)
    for rc in transfer_instances()[:30]:
        H = rc.basis
        R = H.ring
        f = Polynomial(R, {m: rng.randint(-4, 4) for m in oracles.monomials(3, rng.randint(2, 5))})
        f = f + H.elements[0] * Polynomial(R, {m: 1 for m in oracles.monomials(3, 2)})
        expected = involutive_normal_form(f, H.elements)
        for s in range(4):
            assert involutive_normal_form(f, H.elements, rng=random.Random(s)) == expected

    for rc in transfer_instances():
        lt = buchberger(list(rc.generators)).leading_ideal()
        assert lt == rc.basis.leading_ideal()


@pytest.mark.acceptance(7, "reduced Groebner basis with stable lt passes the closure check")
def test_criterion_7_stable_groebner_basis():
    R, _ = ring3()
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        F = random_homogeneous(rng, R, count=(2, 3), degrees=(1, 3))
        G = buchberger(F)
        if not is_stable(G.leading_ideal()):
            continue
        assert closure_check(list(G.elements)), F
        checked += 1
    assert checked >= 50
    assert not closure_check(x2y2_generators())


@pytest.mark.acceptance(8, "componentwise linear fixtures: bigraded ranks bounded by the gin candidate")
def test_criterion_8_ranks_below_gin():
    R, (x, y, z) = ring3()
    fixtures = [
        m2_generators(),
        sharp_generators(),
        [z * z - x * y],
        [z * z, y * z, y * y],
        [z - x, y * y],
        [x + y + z, x - y],
    ]
    for F in fixtures:
        v = is_componentwise_linear(F)
        assert v.verdict
        H = pommaret_basis(list(v.generators))
        assert minimal_resolution_test(H)
        s = gin_sample(F, trials=16)
        assert s.candidate is not None and s.stable
        assert gin_rank_comparison(H, monomial_pommaret_complete(s.candidate))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
