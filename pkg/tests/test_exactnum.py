import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mckay_lab.exactnum import (
    Cyclotomic,
    cyclotomic_polynomial,
    euler_phi,
    golden_ratio,
    golden_ratio_conjugate,
    parse_cyclotomic,
    render_cyclotomic,
    sqrt5,
)


def test_zeta4_squared_is_minus_one():
    i = Cyclotomic.zeta(4)
    assert i * i == -1
    assert (i * i).conductor == 1


def test_zeta3_plus_zeta3_squared_is_minus_one():
    assert Cyclotomic(3, {1: 1, 2: 1}) == -1


def test_gauss_sum_embeds_to_sqrt5():
    # independent oracle: numerical evaluation of the complex embedding
    value = sqrt5().to_complex()
    assert abs(value - cmath.sqrt(5)) < 1e-12


def test_normalization_idempotent():
    x = Cyclotomic(12, {1: Fraction(1, 2), 7: -3, 13: 1})
    again = Cyclotomic(x.conductor, dict(enumerate(x.coefficients)))
    assert again == x


def test_conductor_zero_rejected():
    with pytest.raises(ValueError):
        Cyclotomic(0, {0: 1})


def test_exponents_reduced_mod_conductor():
    assert Cyclotomic(5, {6: 1}) == Cyclotomic.zeta(5)
    assert Cyclotomic(5, {-1: 1}) == Cyclotomic.zeta(5, 4)


def test_golden_ratio_product():
    # x^2 - x - 1 forces the product of its two roots to be -1
    assert golden_ratio() * golden_ratio_conjugate() == -1


def test_additive_identity():
    a = Cyclotomic(7, {1: 2, 3: Fraction(1, 3)})
    assert a + Cyclotomic.from_rational(0) == a


def test_zeta5_times_zeta5_fourth():
    assert Cyclotomic.zeta(5) * Cyclotomic.zeta(5, 4) == 1


def test_conjugation():
    z3 = Cyclotomic.zeta(3)
    assert z3.conjugate() == Cyclotomic.zeta(3, 2)
    assert sqrt5().conjugate() == sqrt5()  # real element fixed
    a = Cyclotomic(12, {1: 1, 5: Fraction(2, 7)})
    assert a.conjugate().conjugate() == a


def test_embedding_values():
    assert Cyclotomic.from_rational(1).to_complex() == 1.0 + 0.0j
    assert abs(Cyclotomic.zeta(4).to_complex() - 1j) < 1e-12
    assert abs(golden_ratio().to_complex() - (1 + 5**0.5) / 2) < 1e-12


def test_conductor_minimization():
    # an element written over the 20th roots that lives in the 5th field
    phi_as_20 = Cyclotomic(20, {4 * k: c for k, c in enumerate(golden_ratio().coefficients)})
    assert phi_as_20.conductor == 5
    assert phi_as_20 == golden_ratio()


def test_inverse_and_division():
    a = golden_ratio()
    assert a * a.inverse() == 1
    b = Cyclotomic.zeta(8) + 2
    assert (b / b) == 1
    with pytest.raises(ZeroDivisionError):
        Cyclotomic.from_rational(0).inverse()


def test_rendering_round_trip():
    cases = [
        Cyclotomic.from_rational(Fraction(-3, 7)),
        Cyclotomic.zeta(5),
        golden_ratio(),
        Cyclotomic(12, {0: Fraction(1, 2), 1: -1, 5: Fraction(22, 7)}),
        Cyclotomic.from_rational(0),
    ]
    for x in cases:
        assert parse_cyclotomic(render_cyclotomic(x)) == x


def test_parse_redundant_form():
    literal = "1/2+1/2*z5-1/2*z5^2-1/2*z5^3+1/2*z5^4"
    assert parse_cyclotomic(literal) == golden_ratio()


def test_euler_phi_and_cyclotomic_polynomials():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 12)] == [1, 1, 2, 2, 4, 4]
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


small_rationals = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
)


@st.composite
def cyclotomics(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    support = draw(st.lists(st.integers(min_value=0, max_value=n - 1), max_size=3))
    coeffs = {e: draw(small_rationals) for e in support}
    return Cyclotomic(n, coeffs)


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics(), cyclotomics())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_embedding_is_multiplicative(a, b):
    lhs = (a * b).to_complex()
    rhs = a.to_complex() * b.to_complex()
    assert abs(lhs - rhs) < 1e-9


@settings(max_examples=60, deadline=None)
@given(cyclotomics(), cyclotomics())
def test_canonical_equality_consistent_with_embedding(a, b):
    if a == b:
        assert abs(a.to_complex() - b.to_complex()) < 1e-9
    else:
        assert abs((a - b).to_complex()) > 1e-9
