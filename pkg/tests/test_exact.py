import pytest
import numpy as np
from fractions import Fraction
from math import comb, factorial
from hypothesis import given
import hypothesis.strategies as st
from zetamoments.exact import (
    PowerSeries,
    alpha,
    bernoulli,
    bernoulli_poly,
    bernoulli_poly_half,
    binomial_indicator,
    euler_operator_coeffs,
    eta,
    falling,
    harmonic,
    iota,
    kcoef,
    seq_E,
    seq_L,
    series_compose_one_minus_exp,
    stirling1,
    stirling2,
    stirling_matrix,
    unit_sequence,
)
from tests.utils import akiyama_tanigawa


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_matches_akiyama_tanigawa():
    for n in range(0, 41):
        expected = akiyama_tanigawa(n)
        if n == 1:
            expected = -expected
        assert bernoulli(n) == expected, n


def test_bernoulli_rejects_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_bernoulli_poly_half():
    assert bernoulli_poly_half(0) == 1
    assert bernoulli_poly_half(1) == 0
    assert bernoulli_poly_half(2) == Fraction(-1, 12)
    for n in range(26):
        assert bernoulli_poly_half(n) == (Fraction(2) ** (1 - n) - 1) * bernoulli(n)
        assert bernoulli_poly(n, Fraction(1, 2)) == bernoulli_poly_half(n)


def test_bernoulli_poly_at_zero_and_one():
    for n in range(2, 15):
        assert bernoulli_poly(n, 0) == bernoulli(n)
        assert bernoulli_poly(n, 1) == bernoulli(n)


class TestStirling:
    """Stirling triangles against the small matrices and both recurrences."""

    def test_known_values(self):
        assert stirling2(4, 2) == 7
        assert stirling2(5, 3) == 25
        assert stirling1(4, 2) == 11
        assert stirling1(4, 1) == -6
        assert stirling1(5, 2) == -50
        for n in range(12):
            assert stirling2(n, n) == 1
            assert stirling1(n, n) == 1

    def test_out_of_range_is_zero(self):
        assert stirling2(3, 4) == 0
        assert stirling2(3, -1) == 0
        assert stirling1(0, 1) == 0
        assert stirling2(0, 0) == stirling1(0, 0) == 1
        assert stirling2(5, 0) == stirling1(5, 0) == 0

    def test_recurrences(self):
        for n in range(30):
            for k in range(1, n + 2):
                assert stirling2(n + 1, k) == stirling2(n, k - 1) + k * stirling2(n, k)
                assert stirling1(n + 1, k) == stirling1(n, k - 1) - n * stirling1(n, k)

    def test_direct_formula_second_kind(self):
        # S(n,k) = (1/k!) sum_i (-1)^i C(k,i) (k-i)^n
        for n in range(1, 16):
            for k in range(1, n + 1):
                direct = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k + 1)) // factorial(k)
                assert stirling2(n, k) == direct

    def test_matrices_are_inverse(self):
        size = 30
        s2 = np.array(stirling_matrix(2, size), dtype=object)
        s1 = np.array(stirling_matrix(1, size), dtype=object)
        product = s2.dot(s1)
        for i in range(size + 1):
            for j in range(size + 1):
                assert product[i, j] == (1 if i == j else 0)

    def test_invalid_kind(self):
        with pytest.raises(ValueError):
            stirling_matrix(3, 4)

    def test_euler_operator_row(self):
        assert euler_operator_coeffs(4) == (0, 1, 7, 6, 1)


def test_harmonic():
    assert harmonic(-1) == 0
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(-2)


def test_kcoef_values():
    for k in range(1, 12):
        assert kcoef(k + 1, k) == Fraction(1, 2)
        assert kcoef(k + 1, k + 1) == Fraction(1, k + 1)
    assert kcoef(4, 1) == 0
    with pytest.raises(ValueError):
        kcoef(3, 4)
    with pytest.raises(ValueError):
        kcoef(0, 0)


def test_kcoef_stirling_identity():
    for k in range(1, 31):
        for j in range(1, k + 1):
            lhs = sum((Fraction(stirling2(k, p) * stirling1(p, j), p) for p in range(j, k + 1)), Fraction(0))
            assert lhs == kcoef(k, j), (k, j)


def test_alpha():
    assert alpha(1, 1) == -1
    assert alpha(4, 2) == 14
    assert alpha(3, 3) == -6
    assert alpha(3, 0) == 0
    assert alpha(3, 4) == 0


def test_alpha_recurrence():
    for k in range(1, 21):
        for p in range(1, k + 1):
            assert alpha(k, p - 1) - alpha(k, p) == Fraction(-alpha(k + 1, p), p)


class TestSequenceOperators:
    def test_e_of_iota_is_bernoulli(self):
        e = seq_E(iota(25), 25)
        assert e[2] == Fraction(1, 6)
        assert e == [bernoulli(n) for n in range(26)]

    def test_e_of_eta(self):
        e = seq_E(eta(25), 25)
        assert e[3] == -3
        assert e == [(-1) ** n * n + (1 if n == 1 else 0) for n in range(26)]

    def test_e_of_zero(self):
        assert seq_E([Fraction(0)] * 6, 5) == [0] * 6

    def test_l_examples(self):
        assert seq_L(seq_E(iota(4), 4), 4) == Fraction(7, 15)
        assert seq_L(seq_E(eta(3), 3), 3) == 0
        assert seq_L(unit_sequence(2), 2) == 9

    def test_short_sequence_rejected(self):
        with pytest.raises(ValueError):
            seq_E(iota(2), 3)
        with pytest.raises(ValueError):
            seq_L(iota(2), 3)


class TestPowerSeries:
    def test_one_minus_exp_neg(self):
        s = PowerSeries.one_minus_exp_neg(4)
        assert s.coefficients == (0, 1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 24))

    def test_compose_iota(self):
        u = PowerSeries.from_coefficients(iota(4), 4)
        out = series_compose_one_minus_exp(u)
        assert out.coefficients == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))

    def test_compose_constant(self):
        out = series_compose_one_minus_exp(PowerSeries.constant(1, 6))
        assert out == PowerSeries.constant(1, 6)

    def test_compose_eta(self):
        u = PowerSeries.from_coefficients(eta(4), 4)
        out = series_compose_one_minus_exp(u)
        assert out.coefficients == (0, 0, 1, Fraction(1, 2), Fraction(1, 6))

    def test_generating_function_lemma(self):
        order = 15
        sequences = [iota(order), eta(order)] + [binomial_indicator(j, order) for j in range(1, 6)]
        for u in sequences:
            composed = series_compose_one_minus_exp(PowerSeries.from_coefficients(u, order))
            e = seq_E(u, order)
            for n in range(order + 1):
                assert composed[n] == Fraction((-1) ** n, factorial(n)) * e[n]

    def test_eta_composition_is_t_times_exp_minus_one(self):
        t = PowerSeries.from_coefficients([0, 1], 8)
        u = PowerSeries.from_coefficients(eta(8), 8)
        assert series_compose_one_minus_exp(u) == t * PowerSeries.exp_minus_one(8)

    def test_compose_requires_zero_constant(self):
        outer = PowerSeries.constant(1, 3)
        with pytest.raises(ValueError):
            outer.compose(PowerSeries.constant(1, 3))

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            PowerSeries.constant(1, 3) + PowerSeries.constant(1, 4)


_coeffs = st.lists(st.fractions(max_denominator=20).filter(lambda x: abs(x) < 100), min_size=6, max_size=6)


@given(_coeffs, _coeffs, _coeffs)
def test_power_series_ring_properties(a, b, c):
    x, y, z = (PowerSeries.from_coefficients(v, 5) for v in (a, b, c))
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert (x - x) == PowerSeries.constant(0, 5)


@given(_coeffs, _coeffs)
def test_composition_is_multiplicative(a, b):
    inner = PowerSeries.one_minus_exp_neg(5)
    x, y = (PowerSeries.from_coefficients(v, 5) for v in (a, b))
    assert (x * y).compose(inner) == x.compose(inner) * y.compose(inner)


def test_falling():
    assert falling(5, 0) == 1
    assert falling(5, 2) == 20
    assert falling(3, 4) == 0
    assert falling(-2, 3) == -24
    with pytest.raises(ValueError):
        falling(3, -1)
