"""Betti table oracle: upper Koszul complexes, simplicial homology, and the
regularity read-offs from column maxima."""

import random

import pytest

from cmreg import (
    MonomialIdeal,
    PolynomialRing,
    betti_table,
    hilbert_numerator,
    invariants_from_betti,
    krull_dimension,
)
from cmreg.betti import (
    MAX_GENERATORS,
    OracleScopeError,
    lcm_multidegrees,
    reduced_homology_ranks,
    upper_koszul_complex,
    upper_koszul_homology,
)

from conftest import random_monomial_ideal


class TestLcmMultidegrees:
    def test_two_coprime_generators(self, R2):
        J = MonomialIdeal.from_generators(R2, [(1, 0), (0, 1)])
        assert lcm_multidegrees(J) == {(1, 0), (0, 1), (1, 1)}

    def test_dedupes(self, R3):
        J = MonomialIdeal.from_generators(
            R3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
        )
        lats = lcm_multidegrees(J)
        # all pairwise and triple lcms coincide at (1,1,1)
        assert lats == {(1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)}

    def test_rejects_zero_and_unit(self, R2):
        with pytest.raises(ValueError):
            lcm_multidegrees(MonomialIdeal.from_generators(R2, []))
        with pytest.raises(ValueError):
            lcm_multidegrees(MonomialIdeal.from_generators(R2, [(0, 0)]))

    def test_scope_guard(self, R2):
        # an antichain of 21 incomparable monomials survives minimalization
        gens = [(a, MAX_GENERATORS - a) for a in range(MAX_GENERATORS + 1)]
        with pytest.raises(OracleScopeError):
            lcm_multidegrees(MonomialIdeal.from_generators(R2, gens))


class TestUpperKoszul:
    def test_void_when_outside(self, R2):
        J = MonomialIdeal.from_generators(R2, [(2, 0)])
        assert upper_koszul_complex(J, (1, 0)) == []

    def test_two_variables_disconnected_pair(self, R2):
        # J = (x1, x2) at b = (1,1): vertices {0} and {1} but not the edge,
        # so H~_0 has rank 1 and beta_{2,(1,1)} = 1
        J = MonomialIdeal.from_generators(R2, [(1, 0), (0, 1)])
        faces = upper_koszul_complex(J, (1, 1))
        assert faces == [[()], [(0,), (1,)]]
        assert upper_koszul_homology(J, (1, 1)) == [1]

    def test_full_simplex_is_acyclic(self, R2):
        J = MonomialIdeal.from_generators(R2, [(1, 0)])
        ranks = upper_koszul_homology(J, (2, 1))
        assert all(r == 0 for r in ranks)

    def test_empty_face_only_contributes_h_minus_one(self, R3):
        # b = lcm of nothing reachable: complex is the empty-face point set?
        # here x^b itself lies in J but no reduced multidegree does, so the
        # complex is {empty face} and H~_{-1} would be 1 (dimension -1 rank
        # is not reported; the list is empty)
        J = MonomialIdeal.from_generators(R3, [(1, 1, 1)])
        faces = upper_koszul_complex(J, (1, 1, 1))
        assert faces == [[()]]
        assert upper_koszul_homology(J, (1, 1, 1)) == []

    def test_reduced_homology_of_circle(self):
        # hollow triangle: H~_0 = 0, H~_1 = 1
        faces = [[()], [(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)]]
        assert reduced_homology_ranks(faces) == [0, 1]


class TestBettiTable:
    def test_koszul_two_variables(self, R2):
        J = MonomialIdeal.from_generators(R2, [(1, 0), (0, 1)])
        T = betti_table(J)
        assert T.entries == {(0, 0): 1, (1, 1): 2, (2, 2): 1}

    def test_two_generator_chain(self, R3):
        # S/(x1x2, x2x3): taylor complex is minimal
        J = MonomialIdeal.from_generators(R3, [(1, 1, 0), (0, 1, 1)])
        T = betti_table(J)
        assert T.entries == {(0, 0): 1, (1, 2): 2, (2, 3): 1}

    def test_curve_initial_ideal_regularity(self, curve_initial):
        T = betti_table(curve_initial)
        inv = invariants_from_betti(T)
        assert inv["reg"] == 2
        assert inv["astar"] == 1

    def test_generator_row(self):
        rng = random.Random(11)
        R = PolynomialRing(["x1", "x2", "x3"])
        done = 0
        while done < 20:
            J = random_monomial_ideal(rng, R)
            if J is None or J.is_unit():
                continue
            T = betti_table(J)
            from collections import Counter

            degs = Counter(sum(g) for g in J.gens)
            row1 = {j: r for (i, j), r in T.entries.items() if i == 1}
            assert row1 == dict(degs)
            done += 1

    def test_euler_characteristic_matches_hilbert_numerator(self):
        # alternating sum of the Betti table equals the Hilbert numerator,
        # an independent consistency check between the two engines
        rng = random.Random(13)
        names = ["x1", "x2", "x3", "x4"]
        done = 0
        while done < 30:
            n = rng.randint(2, 4)
            R = PolynomialRing(names[:n])
            J = random_monomial_ideal(rng, R)
            if J is None or J.is_unit():
                continue
            T = betti_table(J)
            assert T.k_polynomial() == hilbert_numerator(J)
            done += 1

    def test_projective_dimension_bound(self):
        rng = random.Random(23)
        R = PolynomialRing(["x1", "x2", "x3"])
        done = 0
        while done < 20:
            J = random_monomial_ideal(rng, R)
            if J is None or J.is_unit():
                continue
            T = betti_table(J)
            assert max(i for (i, _) in T.entries) <= R.n
            done += 1

    def test_char_p_agrees_in_small_cases(self):
        rng = random.Random(31)
        R = PolynomialRing(["x1", "x2", "x3"])
        done = 0
        while done < 15:
            J = random_monomial_ideal(rng, R, max_deg=3, max_gens=4)
            if J is None or J.is_unit():
                continue
            assert betti_table(J).entries == betti_table(J, field_char=32003).entries
            done += 1


class TestInvariantsFromBetti:
    def test_partial_thresholds(self, curve_initial):
        # dim S/J = 2: full invariants need t >= 2
        T = betti_table(curve_initial)
        d = krull_dimension(curve_initial)
        assert d == 2
        for t in range(d, curve_initial.n + 1):
            inv = invariants_from_betti(T, t=t)
            assert inv["reg_t"] == 2
            assert inv["astar_t"] == 1

    def test_t_zero_uses_last_column_only(self, R2):
        J = MonomialIdeal.from_generators(R2, [(1, 0), (0, 1)])
        inv = invariants_from_betti(betti_table(J), t=0)
        # only i >= n - 0 = 2 contributes: b_2 = 2
        assert inv["reg_t"] == 0
        assert inv["astar_t"] == 0

    def test_reports_max_generator_degree(self, curve_initial):
        inv = invariants_from_betti(betti_table(curve_initial))
        assert inv["d"] == 3
