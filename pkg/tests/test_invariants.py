import random

import pytest

import oracles
from ideals import m2_generators, random_homogeneous, rem44_generators, ring2, ring3, sharp_generators, x2y2_generators
from pommaret.involutive import pommaret_basis
from pommaret.invariants import (
    basic_invariants,
    census,
    cohomology_maxima,
    extremal_betti,
    hilbert_series,
    invariant_report,
    q_invariants,
    regularity,
    resolution_ranks,
    satiety,
    saturation_from_basis,
)
from pommaret.monomial import MonomialIdeal, NotQuasiStable, monomial_pommaret_complete, saturation
from pommaret.regularity import find_delta_regular_coordinates

M2, X2Y2, REM44, SHARP = (pommaret_basis(f()) for f in (m2_generators, x2y2_generators, rem44_generators, sharp_generators))


def test_census():
    c = census(M2)
    assert c.marginals == (3, 2, 1) and c.counts == {(1, 2): 3, (2, 2): 2, (3, 2): 1}
    assert census(X2Y2).counts == {(1, 2): 1, (1, 3): 1, (2, 2): 1}
    R, (x, y, z) = ring3()
    assert census(pommaret_basis([z**4])).counts == {(3, 4): 1}


def test_regularity():
    assert regularity(M2) == 2
    assert regularity(X2Y2) == 3
    assert regularity(REM44) == 3


def test_regularity_against_minimal_betti_numbers():
    for H in (M2, X2Y2, REM44, SHARP):
        table = oracles.betti_table(H.lead_exponents, H.n)
        assert regularity(H) == max(j - i for i, j in table)


def test_basic_invariants():
    b = basic_invariants(M2)
    assert (b.pd, b.depth_quotient, b.dim, b.cohen_macaulay) == (2, 0, 0, True)
    b = basic_invariants(X2Y2)
    assert (b.pd, b.depth_quotient, b.dim, b.cohen_macaulay) == (1, 0, 0, True)
    b = basic_invariants(SHARP)
    assert (b.pd, b.depth_quotient, b.dim, b.cohen_macaulay, b.noether_vars) == (1, 1, 2, False, (1, 2))


def test_one_dimensional_fixture():
    R, (x, y, z) = ring3()
    rc = find_delta_regular_coordinates([x * z, y * y])
    b = basic_invariants(rc.basis)
    assert b.dim == 1 and b.noether_vars == (1,)


def test_projective_dimension_against_minimal_betti_numbers():
    for H in (M2, X2Y2, REM44, SHARP):
        table = oracles.betti_table(H.lead_exponents, H.n)
        assert basic_invariants(H).pd == max(i for i, _ in table)


def test_satiety():
    assert satiety(M2) == 2
    assert satiety(X2Y2) == 3
    assert satiety(REM44) == 3
    assert satiety(SHARP) is None
    for H in (M2, X2Y2, REM44, SHARP):
        assert satiety(H) == oracles.satiety(H.lead_exponents, H.n, regularity(H) + 3)


def test_saturation_of_square_of_maximal_ideal_is_unit():
    s = saturation_from_basis(M2)
    assert s.unit and not s.saturated
    assert any(h.is_constant() for h in s.weak_basis)
    assert saturation(M2.leading_ideal()).unit


def test_saturated_ideal():
    s = saturation_from_basis(SHARP)
    assert s.saturated and not s.unit
    assert set(s.basis) == set(SHARP.elements)
    R, (x, y, z) = ring3()
    assert saturation_from_basis(pommaret_basis([z**3])).saturated


def test_saturation_is_idempotent_and_matches_colon():
    R, (x, y, z) = ring3()
    rng = random.Random(8)
    done = 0
    while done < 20:
        F = random_homogeneous(rng, R, count=(2, 3), degrees=(2, 3))
        H = find_delta_regular_coordinates(F, seed=done).basis
        s = saturation_from_basis(H)
        lt_sat = saturation(H.leading_ideal())
        assert s.saturated == (lt_sat == H.leading_ideal())
        if s.unit:
            assert lt_sat.unit
        else:
            again = saturation_from_basis(s.pommaret_basis())
            assert again.saturated
            assert MonomialIdeal.from_generators(s.pommaret_basis().lead_exponents) == lt_sat
        done += 1


def test_q_invariants():
    assert q_invariants(X2Y2) == (2, 1)
    assert q_invariants(M2) == (1, 1, 1)
    assert q_invariants(SHARP) == (None, 1, 1)
    for H in (M2, X2Y2, REM44, SHARP):
        bound = regularity(H) + 3
        assert q_invariants(H) == tuple(oracles.q_invariant(H.lead_exponents, H.n, i, bound) for i in range(1, H.n + 1))


def test_cohomology_maxima():
    assert cohomology_maxima(M2, 0) == (1, 1)
    assert cohomology_maxima(SHARP, 0) == (None, None)
    assert cohomology_maxima(SHARP, 1) == (1, 0)
    with pytest.raises(ValueError):
        cohomology_maxima(M2, 1)


def test_resolution_ranks():
    assert resolution_ranks(M2).total == (6, 8, 3)
    assert resolution_ranks(M2).bigraded == oracles.eliahou_kervaire(M2.lead_exponents, 3)
    r = resolution_ranks(X2Y2)
    assert r.total == (3, 2) and r.length == 1
    # the minimal resolution is the Koszul complex, so this one is not minimal
    assert oracles.betti_table([(2, 0), (0, 2)], 2) == {(0, 2): 2, (1, 4): 1}
    assert resolution_ranks(SHARP).total == (2, 1)


def test_extremal_betti():
    assert extremal_betti(M2) == [((2, 4), 3)]
    assert extremal_betti(X2Y2) == [((1, 4), 1)]
    assert extremal_betti(REM44) == [((2, 5), 1)]
    for H in (M2, X2Y2, REM44, SHARP):
        assert extremal_betti(H) == oracles.extremal_from_table(oracles.betti_table(H.lead_exponents, H.n))


def test_extremal_betti_on_random_quasi_stable_ideals():
    rng = random.Random(21)
    checked = 0
    while checked < 60:
        n = rng.choice([2, 3])
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        H = monomial_pommaret_complete(MonomialIdeal.from_generators(gens))
        if isinstance(H, NotQuasiStable):
            continue
        table = oracles.betti_table(gens, n)
        assert extremal_betti(H) == oracles.extremal_from_table(table)
        assert regularity(H) == max(j - i for i, j in table)
        assert basic_invariants(H).pd == max(i for i, _ in table)
        checked += 1


def test_hilbert_series():
    hs = hilbert_series(X2Y2)
    assert hs.coefficients(8) == [0, 0, 2, 4, 5, 6, 7, 8, 9]
    assert hs.coefficients(8) == [oracles.hilbert_count([(2, 0), (0, 2)], 2, q) for q in range(9)]
    from math import comb

    assert hilbert_series(M2).coefficients(7)[2:] == [comb(q + 2, 2) for q in range(2, 8)]
    R, (x, y, z) = ring3()
    assert hilbert_series(pommaret_basis([z**3])).numerator == (0, 0, 0, 1)
    assert hilbert_series(M2).quotient_coefficients(4) == [1, 3, 0, 0, 0]


def test_report_consistency():
    for H in (M2, X2Y2, REM44, SHARP):
        r = invariant_report(H)
        assert r.pd + r.depth_quotient + 1 == H.n
        assert r.cohen_macaulay == (r.dim == r.depth_quotient)
        assert r.satiety is None or r.satiety <= r.reg
        assert all(q is None or q <= r.reg - 1 for q in r.q_vector)
        assert len(r.reg_t) == r.dim + 1
