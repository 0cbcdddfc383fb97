import pytest
from fractions import Fraction
import mpmath
from hypothesis import given
import hypothesis.strategies as st
from zetamoments.symbolic import (
    EULER_GAMMA,
    LOG2PI,
    UNIT,
    ConstSymbol,
    PiPow,
    SymbolKind,
    SymVal,
    Zeta,
    assert_no_odd_zeta,
    constant_C,
    eval_numeric,
    reduce_zeta_even,
    render,
)


def test_zero_coefficients_are_dropped():
    v = SymVal({UNIT: 0, LOG2PI: Fraction(1, 2)})
    assert len(v) == 1
    assert v.coefficient(UNIT) == 0
    assert SymVal().is_zero()
    assert (v - v).is_zero()


def test_symbol_validation():
    with pytest.raises(ValueError):
        Zeta(1)
    with pytest.raises(ValueError):
        PiPow(3)
    with pytest.raises(ValueError):
        ConstSymbol(SymbolKind.UNIT, 2)
    with pytest.raises(TypeError):
        SymVal({"unit": 1})


def test_symbol_keys():
    for sym in (UNIT, LOG2PI, EULER_GAMMA, Zeta(3), Zeta(10), PiPow(4)):
        assert ConstSymbol.from_key(sym.key) == sym
    with pytest.raises(ValueError):
        ConstSymbol.from_key("zeta")


class TestArithmetic:
    def test_add_and_scale(self):
        a = SymVal({LOG2PI: 1, UNIT: Fraction(-23, 6)})
        b = SymVal.of(Zeta(2), Fraction(4, 3)) - SymVal.of(EULER_GAMMA)
        total = a + b
        assert total.coefficient(Zeta(2)) == Fraction(4, 3)
        assert total.coefficient(EULER_GAMMA) == -1
        assert (total * 6).coefficient(UNIT) == -23
        assert (total / 2).coefficient(LOG2PI) == Fraction(1, 2)
        assert 3 * SymVal.rational(1) == 3

    def test_rational_coercion(self):
        assert SymVal.rational(2) + 1 == 3
        assert 1 - SymVal.rational(Fraction(1, 4)) == SymVal.rational(Fraction(3, 4))

    def test_product_of_values_is_rejected(self):
        with pytest.raises(TypeError):
            constant_C() * constant_C()

    def test_float_scalars_are_rejected(self):
        with pytest.raises(TypeError):
            constant_C() * 0.5

    def test_mixed_forms_are_rejected(self):
        with pytest.raises(ValueError):
            SymVal({Zeta(2): 1, PiPow(2): 1})
        with pytest.raises(ValueError):
            SymVal.of(Zeta(4)) + SymVal.of(PiPow(2))

    def test_odd_zeta_with_pi_is_allowed(self):
        v = SymVal.of(Zeta(3)) + SymVal.of(PiPow(2))
        assert v.is_pi_form
        with pytest.raises(ArithmeticError):
            assert_no_odd_zeta(v)

    def test_hash_and_equality(self):
        a = SymVal({UNIT: 1, Zeta(2): 2})
        b = SymVal({Zeta(2): 2, UNIT: 1})
        assert a == b
        assert hash(a) == hash(b)
        assert len({a, b}) == 1


def test_constant_c_value():
    assert abs(eval_numeric(constant_C(), 20) - mpmath.mpf("0.63033070075390631")) < 1e-13


def test_reduce_zeta_even():
    assert reduce_zeta_even(SymVal.of(Zeta(2))) == SymVal.of(PiPow(2), Fraction(1, 6))
    assert reduce_zeta_even(SymVal.of(Zeta(4))) == SymVal.of(PiPow(4), Fraction(1, 90))
    assert reduce_zeta_even(SymVal.of(Zeta(6))) == SymVal.of(PiPow(6), Fraction(1, 945))
    with pytest.raises(ValueError):
        reduce_zeta_even(SymVal.of(Zeta(3)))


def test_reduction_keeps_value():
    v = SymVal({LOG2PI: 1, EULER_GAMMA: -1, UNIT: Fraction(-23, 6), Zeta(2): Fraction(4, 3)})
    pi_form = reduce_zeta_even(v)
    assert pi_form.is_pi_form and not pi_form.has_even_zeta
    assert abs(eval_numeric(v, 30) - eval_numeric(pi_form, 30)) < mpmath.mpf(10) ** -28


class TestEvalNumeric:
    def test_constants(self):
        assert abs(eval_numeric(SymVal.of(LOG2PI)) - mpmath.mpf("1.837877066")) < 1e-9
        assert abs(eval_numeric(SymVal.of(Zeta(2))) - mpmath.mpf("1.644934066")) < 1e-9
        assert abs(eval_numeric(SymVal.of(Zeta(3))) - mpmath.mpf("1.202056903")) < 1e-9
        assert eval_numeric(SymVal()) == 0

    def test_high_precision(self):
        v = eval_numeric(SymVal.of(PiPow(2)), 60)
        with mpmath.workdps(70):
            assert abs(v - mpmath.pi**2) < mpmath.mpf(10) ** -59

    def test_precision_bounds(self):
        with pytest.raises(ValueError):
            eval_numeric(constant_C(), 0)
        with pytest.raises(ValueError):
            eval_numeric(constant_C(), 1001)


def test_json_round_trip_examples():
    v = SymVal({LOG2PI: 1, EULER_GAMMA: -1, UNIT: Fraction(-23, 6), Zeta(2): Fraction(4, 3)})
    assert v.to_dict() == {"unit": "-23/6", "log2pi": "1/1", "gamma": "-1/1", "zeta2": "4/3"}
    assert SymVal.from_json(v.to_json()) == v
    assert SymVal.from_json("{}").is_zero()


class TestRender:
    def test_moment_form(self):
        v = SymVal({LOG2PI: 1, EULER_GAMMA: -1, UNIT: Fraction(-23, 6), Zeta(2): Fraction(4, 3)})
        assert render(v) == "log(2π) − γ − 23/6 + (4/3)ζ(2)"

    def test_c_basis(self):
        v = constant_C() * -1 + Fraction(1, 4)
        assert render(v, use_c=True) == "−C + 1/4"
        w = constant_C() * 2 - Fraction(4, 3) + SymVal.of(Zeta(2), Fraction(1, 3))
        assert render(w, use_c=True) == "2C − 4/3 + (1/3)ζ(2)"

    def test_zero_and_pi(self):
        assert render(SymVal()) == "0"
        assert render(SymVal.of(PiPow(4), Fraction(-1, 90))) == "−(1/90)π^4"


_symbols = st.sampled_from([UNIT, LOG2PI, EULER_GAMMA, Zeta(2), Zeta(3), Zeta(5), Zeta(8)])
_values = st.dictionaries(_symbols, st.fractions(max_denominator=50), max_size=5).map(SymVal)
_scalars = st.fractions(max_denominator=30)


@given(_values, _values, _values, _scalars)
def test_vector_space_axioms(a, b, c, r):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a + b) * r == a * r + b * r
    assert a - a == SymVal()
    assert a + SymVal() == a


@given(_values)
def test_json_round_trip(v):
    assert SymVal.from_json(v.to_json()) == v
