"""Laurent polynomial arithmetic: worked examples plus ring-level property tests."""

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from clusterfrieze.laurent import (
    DivisionByZeroValue,
    LaurentPoly,
    NotExactlyDivisible,
)

X1 = LaurentPoly.variable(2, 1)
X2 = LaurentPoly.variable(2, 2)
INV_X1 = LaurentPoly.monomial(2, (-1, 0))


def test_add_additive_inverse():
    assert X1 + (-X1) == LaurentPoly.zero(2)
    assert (X1 + (-X1)).terms == {}


def test_add_disjoint_supports():
    assert (1 + X2) + X1 == LaurentPoly(2, {(0, 0): 1, (1, 0): 1, (0, 1): 1})


def test_add_coefficients():
    assert INV_X1 + INV_X1 == LaurentPoly(2, {(-1, 0): 2})


def test_mul_inverse_monomial():
    assert X1 * INV_X1 == LaurentPoly.one(2)


def test_mul_once_mutated_variable():
    assert (1 + X2) * INV_X1 == LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})


def test_mul_difference_of_squares():
    assert (X1 - 1) * (X1 + 1) == X1 * X1 - 1


def test_exact_div_factorizations():
    assert (X1 * X1 - 1).exact_div(X1 - 1) == X1 + 1
    assert (1 + X1 + X2 + X1 * X2).exact_div(1 + X1) == 1 + X2
    assert (1 + X2).exact_div(X1) == LaurentPoly(2, {(-1, 0): 1, (-1, 1): 1})


def test_exact_div_failure():
    with pytest.raises(NotExactlyDivisible):
        (1 + X2).exact_div(1 + X1)


def test_exact_div_failure_oracle():
    # Independent witness that (1+x2)/(1+x1) is no Laurent polynomial: a Laurent
    # polynomial with integer coefficients takes values with odd denominator at
    # odd integer points, but here the value at (3, 1) is 2/4 = 1/2.
    value = Fraction(1 + 1, 1 + 3)
    assert value.denominator % 2 == 0


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        X1.exact_div(LaurentPoly.zero(2))


def test_substitute_example_values():
    assert (X2 + 1) * INV_X1 != 0
    assert ((X2 + 1) * INV_X1).substitute({2: -1}) == LaurentPoly.zero(2)
    x0 = (1 + X1 + X2).exact_div(X1 * X2)
    assert x0.substitute({2: -1}) == LaurentPoly.constant(2, -1)
    assert ((1 + X2) * INV_X1).substitute({1: 2, 2: 3}) == LaurentPoly.constant(2, 2)


def test_substitute_zero_with_negative_exponent():
    with pytest.raises(DivisionByZeroValue):
        INV_X1.substitute({1: 0})
    # zero is fine where the variable only occurs with nonnegative exponents
    assert (X1 + 1).substitute({1: 0}) == 1


def test_substitute_noninteger_result():
    with pytest.raises(NotExactlyDivisible):
        INV_X1.substitute({1: 2})


def test_substitute_polynomial_value():
    p = X1 + X2
    assert p.substitute({1: X2}) == 2 * X2
    # a unit value may hit negative exponents, a non-unit may not
    assert INV_X1.substitute({1: -X2}) == LaurentPoly(2, {(0, -1): -1})
    with pytest.raises(NotExactlyDivisible):
        INV_X1.substitute({1: X1 + X2})


def test_is_polynomial_in():
    assert (-X1 - 1).is_polynomial_in(1)
    assert not ((1 + X2) * INV_X1).is_polynomial_in(1)
    assert LaurentPoly.zero(2).is_polynomial_in(1)
    assert LaurentPoly.zero(2).is_polynomial_in(2)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        X1 + LaurentPoly.variable(3, 1)
    with pytest.raises(ValueError):
        X1 * LaurentPoly.variable(3, 1)


def test_rendering_contract():
    assert str((1 + X2).exact_div(X1)) == "x1^-1 + x2*x1^-1"
    assert str(1 + X1 + X2) == "1 + x1 + x2"
    assert str(LaurentPoly.zero(2)) == "0"
    assert str(-X1 - 1) == "-1 - x1"
    assert str(LaurentPoly(2, {(-1, 0): 2})) == "2*x1^-1"
    assert ((1 + X2).exact_div(X1)).to_factored_text() == "(1 + x2)*x1^-1"
    assert ((1 + X1 + X2).exact_div(X1 * X2)).to_factored_text() == "(1 + x1 + x2)*x1^-1*x2^-1"
    assert X2.to_factored_text() == "x2"


def test_normalization_is_idempotent():
    p = LaurentPoly(2, {(0, 0): 1, (1, 0): 0})
    assert (1, 0) not in p.terms
    again = LaurentPoly(2, dict(p.terms))
    assert again == p and again.terms == p.terms


def test_constant_value():
    assert LaurentPoly.constant(2, 7).constant_value() == 7
    assert LaurentPoly.zero(2).constant_value() == 0
    with pytest.raises(ValueError):
        X1.constant_value()


# ---------------------------------------------------------------- properties

exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(
    lambda d: LaurentPoly(2, d)
)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_exact_div_round_trip(p, d):
    if d.is_zero():
        return
    product = p * d
    assert product.exact_div(d) == p


@given(polys, polys, st.integers(-3, 3).filter(lambda v: v != 0), st.integers(-3, 3))
def test_substitute_is_a_homomorphism(p, q, v1, v2):
    assignment = {1: v1, 2: v2}

    def sub(poly):
        # route around results that leave the integer ring (non-unit values)
        return poly.substitute(assignment)

    try:
        lhs_mul = sub(p * q)
        rhs_mul = sub(p) * sub(q)
        lhs_add = sub(p + q)
        rhs_add = sub(p) + sub(q)
    except (NotExactlyDivisible, DivisionByZeroValue):
        return
    assert lhs_mul == rhs_mul
    assert lhs_add == rhs_add


@given(polys)
@settings(max_examples=50)
def test_hash_and_equality_are_consistent(p):
    clone = LaurentPoly(2, dict(p.terms))
    assert clone == p
    assert hash(clone) == hash(p)
