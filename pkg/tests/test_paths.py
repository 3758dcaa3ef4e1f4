import math
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from permstat.families import Family, build_polynomial
from permstat.paths import (
    EB,
    NE,
    SE,
    ColoredMotzkinPath,
    FlavorMismatch,
    Flavor,
    InvalidPath,
    JFractionSpec,
    LaguerreHistory,
    PathWeights,
    brute_path_sum,
    contraction_check,
    enumerate_histories,
    fv_inverse,
    fv_map,
    fv_weights,
    fz_inverse,
    fz_map,
    history_weight,
    jfraction_depth,
    jfraction_literal,
    jfraction_series,
    motzkin_enumerate,
    sfraction_literal,
    weighted_path_sum,
)
from permstat.perm import Permutation, all_permutations, parse_permutation
from permstat.poly import ONE, P, Q, MultiPoly, specialize
from permstat.theorems import PAPER_SPECS, sfraction_cs


def const(c):
    return lambda h: MultiPoly.const(c)


class TestMotzkin:
    def test_plain_small(self):
        assert sorted(str(p) for p in motzkin_enumerate(2)) == ["EE", "UD"]

    def test_empty(self):
        assert len(motzkin_enumerate(0)) == 1

    @pytest.mark.parametrize("n", range(0, 9))
    def test_plain_counts(self, n):
        assert len(motzkin_enumerate(n)) == oracle.motzkin_count(n)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_colored_counts_follow_recurrence(self, n):
        paths_ = motzkin_enumerate(n, colored=True)
        assert len(paths_) == oracle.motzkin_colored_count(n)
        assert len(set(paths_)) == len(paths_)

    def test_colored_counts_are_shifted_catalan(self):
        assert [len(motzkin_enumerate(n, True)) for n in range(6)] == [1, 2, 5, 14, 42, 132]

    def test_invalid(self):
        with pytest.raises(InvalidPath):
            ColoredMotzkinPath.parse("D")
        with pytest.raises(InvalidPath):
            ColoredMotzkinPath.parse("UU")

    def test_heights(self):
        assert ColoredMotzkinPath.parse("UBUDRD").heights == (0, 1, 1, 2, 1, 1)


class TestHistories:
    def test_choice_bounds(self):
        with pytest.raises(InvalidPath):
            LaguerreHistory(ColoredMotzkinPath.parse("UD"), (0, 2), Flavor.FV)
        with pytest.raises(InvalidPath):
            LaguerreHistory(ColoredMotzkinPath.parse("UD"), (0, 1), Flavor.FZ)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_fv_history_count(self, n):
        assert len(enumerate_histories(n, Flavor.FV)) == math.factorial(n + 1)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_fz_history_count(self, n):
        assert len(enumerate_histories(n, Flavor.FZ)) == math.factorial(n)

    def test_str(self):
        assert str(fv_map(parse_permutation("213"))) == "UD [0,1]"


class TestFrançonViennot:
    def test_213(self):
        h = fv_map(parse_permutation("213"))
        assert h.path.steps == (NE, SE)
        assert h.choices == (0, 1)

    def test_singleton(self):
        assert len(fv_map(Permutation((1,)))) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_bijective(self, n):
        image = {fv_map(s) for s in all_permutations(n)}
        assert image == set(enumerate_histories(n - 1, Flavor.FV))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_weights_sum_to_A(self, n):
        total = sum((history_weight(fv_map(s), "FV") for s in all_permutations(n)), MultiPoly())
        assert total == build_polynomial(Family.A, n)

    def test_inverse(self):
        for s in all_permutations(5):
            assert fv_inverse(fv_map(s)) == s


class TestFoataZeilberger:
    def test_transposition(self):
        h = fz_map(Permutation((2, 1)))
        assert (h.path.steps, h.choices) == ((NE, SE), (0, 0))

    def test_identity(self):
        h = fz_map(Permutation.identity(2))
        assert h.path.steps == (EB, EB)
        assert h.choices == (0, 0) == h.path.heights

    @pytest.mark.parametrize("n", range(0, 7))
    def test_injective_onto_fz_histories(self, n):
        image = [fz_map(s) for s in all_permutations(n)]
        assert set(image) == set(enumerate_histories(n, Flavor.FZ))
        assert len(set(image)) == len(image)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_weights_sum_to_B(self, n):
        total = sum((history_weight(fz_map(s), "FZ") for s in all_permutations(n)), MultiPoly())
        assert total == build_polynomial(Family.B_CYCLIC, n)

    def test_fixed_points_are_saturated_blue_steps(self):
        for s in all_permutations(5):
            h = fz_map(s)
            for x, (step, ht, c) in enumerate(zip(h.path.steps, h.path.heights, h.choices), 1):
                assert (s(x) == x) == (step is EB and c == ht)

    def test_inverse(self):
        for s in all_permutations(5):
            assert fz_inverse(fz_map(s)) == s

    def test_empty_weight(self):
        assert history_weight(fz_map(Permutation(())), "FZ") == ONE

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorMismatch):
            history_weight(fz_map(Permutation((1,))), "FV")


class TestWeightedSums:
    def test_all_ones(self):
        w = fv_weights()
        ones = PathWeights(*(lambda h, f=f: specialize(f(h), dict(p=1, q=1, t=1, u=1, v=1, w=1))
                             for f in (w.up, w.level, w.down)))
        assert weighted_path_sum(2, ones) == 6

    def test_empty(self):
        assert weighted_path_sum(0, PathWeights(const(7), const(7), const(7))) == 1

    def test_fv_weights_give_A5(self):
        assert weighted_path_sum(4, fv_weights()) == build_polynomial(Family.A, 5)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_dp_matches_brute_force(self, n):
        w = fv_weights()
        assert weighted_path_sum(n, w) == brute_path_sum(n, w)
        assert brute_path_sum(n, w, colored=True) == weighted_path_sum(n, w)


class TestJFractions:
    def test_A2(self):
        assert jfraction_series(PAPER_SPECS["A"](), 3)[1] == build_polynomial(Family.A, 2)

    def test_zero_products_is_geometric(self):
        spec = JFractionSpec(const(3), const(0))
        s = jfraction_series(spec, 6)
        assert [c.constant_value() for c in s.coeffs] == [3 ** k for k in range(7)]

    def test_cfrac2_is_B4(self):
        got = jfraction_series(PAPER_SPECS["cfrac2"](), 4)[4]
        full = build_polynomial(Family.B_CYCLIC, 4)
        assert got == specialize(full, dict(u=1, v=1, w=1, y=1))

    def test_depth(self):
        assert [jfraction_depth(N) for N in range(6)] == [1, 2, 2, 3, 3, 4]

    @pytest.mark.parametrize("name", sorted(PAPER_SPECS))
    def test_every_scheme_dp_literal_and_paths(self, name):
        spec = PAPER_SPECS[name]()
        N = 7
        dp = jfraction_series(spec, N)
        assert dp == jfraction_literal(spec, N)
        for n in range(N + 1):
            assert dp[n] == weighted_path_sum(n, spec.as_path_weights())

    def test_literal_is_stable_in_depth(self):
        spec = PAPER_SPECS["B"]()
        assert jfraction_literal(spec, 6) == jfraction_literal(spec, 6, depth=8)

    def test_literal_too_shallow_differs(self):
        spec = JFractionSpec(const(1), const(1))
        assert jfraction_literal(spec, 6, depth=1) != jfraction_series(spec, 6)


class TestContraction:
    def test_catalan(self):
        rep = contraction_check([ONE] * 12, 6)
        assert rep.passed
        assert [c.constant_value() for c in rep.sfraction.coeffs] == [oracle.catalan(n) for n in range(7)]

    def test_c1_zero(self):
        rep = contraction_check([MultiPoly(), ONE, ONE, ONE], 5)
        assert rep.passed
        assert rep.sfraction == sfraction_literal([MultiPoly()], 5)
        assert all(c.is_zero() for c in rep.sfraction.coeffs[1:])

    def test_pq_weights_give_A_equals_B(self):
        rep = contraction_check(sfraction_cs(12), 6)
        assert rep.passed
        for n in range(1, 7):
            a = specialize(build_polynomial(Family.A, n), dict(u=1, v=1, w=1))
            assert rep.sfraction[n] == a


@settings(max_examples=50)
@given(st.lists(st.integers(-3, 3), min_size=20, max_size=20))
def test_contraction_random_weights(cs):
    rep = contraction_check([MultiPoly.const(c) for c in cs], 10)
    assert rep.passed


def test_contraction_random_polynomial_weights():
    rng = random.Random(20240501)
    for _ in range(5):
        cs = [rng.randint(-3, 3) * P + rng.randint(-3, 3) * Q + rng.randint(-3, 3) for _ in range(16)]
        assert contraction_check(cs, 8).passed
