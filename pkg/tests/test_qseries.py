import cmath
from fractions import Fraction

import pytest

from mckay_lab.qseries import (
    LaurentSeries,
    bernoulli,
    discriminant,
    divisor_power_sum,
    eisenstein,
    j_cube_root,
    j_invariant,
    ramanujan_tau,
)


def test_bernoulli_convention():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_valuation_shift():
    j = j_invariant(3)
    shifted = j.shift(1)
    assert shifted.valuation == 0
    assert shifted.coefficient(0) == 1
    assert shifted.coefficient(1) == 744


def test_product_of_binomials():
    one_plus = LaurentSeries(0, [1, 1], 2)
    one_minus = LaurentSeries(0, [1, -1], 2)
    product = one_plus * one_minus
    assert product.coefficient(0) == 1
    assert product.coefficient(1) == 0
    assert product.coefficient(2) == -1


def test_e4_squared_q_coefficient():
    e4 = eisenstein(4, 2)
    assert (e4 * e4).coefficient(1) == 480  # 2 * 240 by convolution


def test_geometric_inverse():
    inv = LaurentSeries(0, [1, -1], 6).inverse()
    assert inv.coefficients() == [1, 1, 1, 1, 1, 1, 1]


def test_inverse_of_q():
    inv = LaurentSeries.q_power(1, 4).inverse()
    assert inv.valuation == -1
    assert inv.coefficient(-1) == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(ValueError, match="non-invertible"):
        LaurentSeries.zero(5).inverse()


def test_normalized_discriminant_inverse_integral():
    series = discriminant(12).shift(-1).inverse()
    assert all(series.coefficient(k).denominator == 1 for k in range(0, 11))


def test_eisenstein_expansions():
    e4 = eisenstein(4, 2)
    assert [e4.coefficient(k) for k in range(3)] == [1, 240, 2160]
    e6 = eisenstein(6, 2)
    assert [e6.coefficient(k) for k in range(3)] == [1, -504, -16632]
    assert eisenstein(4, 0).coefficients() == [1]


def test_eisenstein_weight_validation():
    for weight in (2, 3, 5, 0, -4):
        with pytest.raises(ValueError):
            eisenstein(weight, 4)


def test_eisenstein_integrality_small_weights():
    for weight in (4, 6, 8, 10, 14):
        series = eisenstein(weight, 12)
        assert all(series.coefficient(k).denominator == 1 for k in range(13))


def test_sigma_multiplicativity():
    # prime powers by the geometric formula, coprime pairs by multiplicativity
    for weight in (4, 6):
        k = weight - 1
        series = eisenstein(weight, 24)
        factor = series.coefficient(1)  # sigma_k(1) = 1 times the constant
        sigma = lambda n: series.coefficient(n) / factor
        for p, a in ((2, 3), (3, 2), (5, 1)):
            expect = sum(Fraction(p) ** (k * e) for e in range(a + 1))
            assert sigma(p**a) == expect
        for m, n in ((2, 3), (3, 4), (4, 5), (3, 8)):
            assert sigma(m) * sigma(n) == sigma(m * n)
        for n in range(1, 25):
            assert sigma(n) == divisor_power_sum(n, k)


def test_j_expansion_classical_coefficients():
    j = j_invariant(4)
    expected = {-1: 1, 0: 744, 1: 196884, 2: 21493760, 3: 864299970, 4: 20245856256}
    for k, v in expected.items():
        assert j.coefficient(k) == v
    assert j.valuation == -1


def test_j_integrality_to_order_20():
    j = j_invariant(20)
    assert all(j.coefficient(k).denominator == 1 for k in range(-1, 21))


def test_j_times_cusp_form_identity():
    # 1728 * E4^3 = j * (E4^3 - E6^2), checked on exact coefficients
    order = 12
    e4cubed = eisenstein(4, order) ** 3
    cusp = e4cubed - eisenstein(6, order) ** 2
    lhs = e4cubed * 1728
    rhs = j_invariant(order) * cusp
    for k in range(0, min(lhs.order, rhs.order) + 1):
        assert lhs.coefficient(k) == rhs.coefficient(k)


def test_tau_values():
    assert ramanujan_tau(1) == 1
    assert ramanujan_tau(2) == -24
    assert ramanujan_tau(3) == 252
    delta = discriminant(20)
    assert delta.valuation == 1
    assert delta.leading_coefficient() == 1
    assert all(delta.coefficient(k).denominator == 1 for k in range(1, 21))


def test_cube_root_spec_examples():
    assert LaurentSeries(0, [1], 5).cube_root().coefficients() == [1, 0, 0, 0, 0, 0]
    croot = j_cube_root(6)
    assert croot.coefficient(1) == 248
    cubed = croot**3
    qj = j_invariant(5).shift(1)
    for k in range(0, 7):
        assert cubed.coefficient(k) == qj.coefficient(k)


def test_cube_root_random_unit_series():
    import random

    rng = random.Random(20260810)
    for _ in range(10):
        coeffs = [Fraction(1)] + [
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(8)
        ]
        series = LaurentSeries(0, coeffs, 8)
        root = series.cube_root()
        assert root**3 == series


def test_cube_root_preconditions():
    with pytest.raises(ValueError, match="cube root undefined"):
        LaurentSeries(1, [1, 2], 4).cube_root()
    with pytest.raises(ValueError, match="cube root undefined"):
        LaurentSeries(0, [2, 1], 4).cube_root()


def test_eval_at_special_points():
    j = j_invariant(30)
    at_i = j.eval_at(1j)
    assert abs(at_i.value - 1728) < 1e-6
    corner = cmath.exp(2j * cmath.pi / 3)
    assert abs(j.eval_at(corner).value) < 1e-6
    assert abs(j.eval_at(1 + 1j).value - at_i.value) < 1e-6


def test_eval_outside_upper_half_plane():
    with pytest.raises(ValueError, match="outside upper half-plane"):
        j_invariant(5).eval_at(1 - 1j)


def test_modular_invariance_spot_check():
    j = j_invariant(40)
    tau = 2j
    base = j.eval_at(tau).value
    for a, b, c, d in ((1, 1, 0, 1), (0, -1, 1, 0), (1, 0, 1, 1), (2, 1, 1, 1), (1, -1, 1, 0)):
        assert a * d - b * c == 1
        moved = (a * tau + b) / (c * tau + d)
        assert abs(j.eval_at(moved).value - base) < 1e-4


def test_eisenstein_agrees_with_partial_lattice_sum():
    # direct (truncated) lattice sum at tau = 2i, normalized by 2*zeta(4)
    tau = 2j
    zeta4 = sum(1 / Fraction(n) ** 4 for n in range(1, 200))
    total = 0j
    cap = 60
    for m in range(-cap, cap + 1):
        for n in range(-cap, cap + 1):
            if m == 0 and n == 0:
                continue
            total += (m + n * tau) ** -4
    lattice_value = total / (2 * float(zeta4))
    series_value = eisenstein(4, 40).eval_at(tau).value
    assert abs(lattice_value - series_value) < 1e-3


def test_precision_bookkeeping():
    a = LaurentSeries(0, [1, 2, 3], 2)
    b = LaurentSeries(0, [1, 1], 1)
    assert (a + b).order == 1
    assert (a * b).order == 1
    with pytest.raises(ValueError):
        (a * b).coefficient(2)
