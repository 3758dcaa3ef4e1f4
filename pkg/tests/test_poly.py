from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from strategies import polys
from permstat.poly import (
    ONE,
    P,
    Q,
    T,
    U,
    V,
    MultiPoly,
    NotDivisible,
    NotSymmetric,
    coefficient_of,
    divides,
    euler_number,
    exact_divide,
    GammaVector,
    gamma_expand,
    parse_poly,
    pq_integer,
    specialize,
)


class TestBasics:
    def test_render_order(self):
        f = (P + Q) * (P + Q + 2)
        assert str(f) == "p^2+2*p*q+q^2+2*p+2*q"

    def test_zero_and_constants(self):
        assert str(MultiPoly()) == "0"
        assert MultiPoly.const(3) == 3
        assert not MultiPoly.const(0)

    def test_no_zero_terms_kept(self):
        assert (P - P).is_zero()
        assert len((P + Q - Q).terms) == 1

    def test_aliases(self):
        assert MultiPoly.var("b") == MultiPoly.var("beta") == MultiPoly.var("β")

    def test_negative_power_only_for_q(self):
        with pytest.raises(ValueError):
            MultiPoly.var("p", -1)
        qinv = MultiPoly.var("q", -1)
        assert qinv * Q == ONE

    def test_parse_round_trip(self):
        f = (P + 2 * Q - T) ** 3 - 7
        assert parse_poly(str(f)) == f

    def test_fraction_coefficients(self):
        f = Fraction(1, 2) * T + Fraction(1, 2) * T
        assert f == T


class TestPqInteger:
    @pytest.mark.parametrize("n, expected", [(0, "0"), (1, "1"), (2, "p+q"), (3, "p^2+p*q+q^2")])
    def test_small(self, n, expected):
        assert str(pq_integer(n)) == expected

    def test_matches_quotient(self):
        for n in range(1, 8):
            assert pq_integer(n) * (P - Q) == P ** n - Q ** n

    def test_consecutive_product_divisible(self):
        for n in range(1, 7):
            assert divides(P + Q, pq_integer(n) * pq_integer(n + 1))


class TestSpecialize:
    def test_numbers(self):
        assert specialize(P + Q, {"p": 1, "q": 1}) == 2

    def test_appendix_entry(self):
        a52 = (P + Q) ** 2 * (P * P + P * Q + Q * Q + 1)
        assert specialize(a52, {"p": 1, "q": 1}) == 16

    def test_partial(self):
        assert specialize(U + T * V, {"u": 1, "v": 1}) == 1 + T

    def test_variable_target(self):
        assert specialize(P * T, {"p": "q"}) == Q * T

    def test_shifted_q(self):
        f = specialize(T + T * T, {"t": -MultiPoly.var("q", -1)})
        assert f * Q * Q == 1 - Q
        assert specialize(f, {"q": 1}) == 0


class TestCoefficients:
    def test_eulerian(self):
        assert coefficient_of(1 + 4 * T + T * T, "t", 1) == 4

    def test_beyond_degree(self):
        assert coefficient_of(T, "t", 5) == 0

    def test_other_variables_kept(self):
        assert coefficient_of(U + T * V, "t", 1) == V


class TestDivision:
    def test_appendix_quotient(self):
        a41 = (P + Q) * (P + Q + 2)
        assert exact_divide(a41, P + Q) == P + Q + 2

    def test_by_one(self):
        f = P ** 3 - 2 * Q
        assert exact_divide(f, ONE) == f

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_divide(P * P + Q * Q, P + Q)

    def test_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(P, MultiPoly())


class TestGamma:
    def test_eulerian_3(self):
        gv = gamma_expand(1 + 4 * T + T * T, 2)
        assert [str(g) for g in gv.gammas] == ["1", "2"]

    def test_pure_middle(self):
        assert [str(g) for g in gamma_expand(T, 2).gammas] == ["0", "1"]

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric):
            gamma_expand(T * T, 2)

    def test_negative_entries_allowed(self):
        gv = gamma_expand(1 + T * T, 2)
        assert not gv.is_nonnegative()
        assert gv.recompose() == 1 + T * T


class TestEuler:
    def test_values(self):
        assert [euler_number(n) for n in range(9)] == [1, 1, 1, 2, 5, 16, 61, 272, 1385]


# -- properties ----------------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f - f == 0


@given(polys(), polys())
def test_exact_divide_inverts_multiplication(f, g):
    if g.is_zero():
        return
    assert exact_divide(f * g, g) == f


@given(polys(), polys(), st.dictionaries(st.sampled_from(["p", "q", "t"]), st.integers(-3, 3)))
def test_specialize_is_a_homomorphism(f, g, s):
    assert specialize(f * g, s) == specialize(f, s) * specialize(g, s)
    assert specialize(f + g, s) == specialize(f, s) + specialize(g, s)


@given(polys())
def test_parse_inverts_render(f):
    assert parse_poly(str(f)) == f


@settings(max_examples=200)
@given(st.lists(polys(names=("p", "q"), max_terms=2, max_deg=2), min_size=1, max_size=4),
       st.integers(0, 7))
def test_gamma_round_trip(gammas, d):
    gammas = gammas[: d // 2 + 1]
    h = GammaVector(tuple(gammas), d).recompose()
    gv = gamma_expand(h, d)
    assert gv.recompose() == h
    assert list(gv.gammas)[: len(gammas)] == gammas
