"""Theta products: Pochhammer symbols, the bilateral sum, named shortcuts."""

import random
from fractions import Fraction

import pytest

from qmock.series import DivergentProduct, GaussianRational, mono, qpow
from qmock.theta import (
    J,
    Jbar,
    Jm,
    jacobi_theta,
    jacobi_theta_product,
    pochhammer_finite,
    pochhammer_infinite,
)

from oracles import (
    assert_dict_eq,
    bilateral_theta,
    poly_mul,
    product_side_pochhammer,
    series_to_dict,
)


class TestPochhammerFinite:
    def test_empty_product(self):
        out = pochhammer_finite(qpow(1), qpow(1), 0)
        assert series_to_dict(out) == {0: 1}

    def test_two_factors_base_two(self):
        # (1-q)(1-q^3) = 1 - q - q^3 + q^4
        out = pochhammer_finite(qpow(1), qpow(2), 2)
        assert series_to_dict(out) == {0: 1, 1: -1, 3: -1, 4: 1}

    def test_sign_flip(self):
        out = pochhammer_finite(mono(-1, 1), qpow(1), 2)
        want = poly_mul({Fraction(0): Fraction(1), Fraction(1): Fraction(1)},
                        {Fraction(0): Fraction(1), Fraction(2): Fraction(1)})
        assert series_to_dict(out) == want


class TestPochhammerInfinite:
    def test_euler_pentagonal(self):
        out = pochhammer_infinite(qpow(1), qpow(1), 13)
        want = product_side_pochhammer(1, 1, 1, 13)
        assert_dict_eq(series_to_dict(out), want, 13)
        assert series_to_dict(out) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}

    def test_all_factors_beyond_order(self):
        out = pochhammer_infinite(qpow(100), qpow(1), 50)
        assert series_to_dict(out) == {0: 1}

    def test_distinct_parts(self):
        out = pochhammer_infinite(mono(-1, 1), qpow(1), 4)
        want = product_side_pochhammer(-1, 1, 1, 4)
        assert_dict_eq(series_to_dict(out), want, 4)
        assert series_to_dict(out) == {0: 1, 1: 1, 2: 1, 3: 2}

    def test_nonpositive_base(self):
        with pytest.raises(DivergentProduct):
            pochhammer_infinite(qpow(1), qpow(0), 5)


class TestJacobiTheta:
    def test_vanishes_at_base_powers(self):
        assert jacobi_theta(qpow(1), qpow(1), 30).is_zero()
        assert jacobi_theta(qpow(6), qpow(3), 30).is_zero()
        assert jacobi_theta(mono(1, 0), qpow(1), 30).is_zero()

    def test_minus_one(self):
        out = jacobi_theta(mono(-1, 0), qpow(1), 7)
        want = bilateral_theta(-1, 0, 1, 7)
        assert series_to_dict(out) == want == {0: 2, 1: 2, 3: 2, 6: 2}

    def test_sum_equals_product_form(self):
        out = jacobi_theta(qpow(1), qpow(3), 20)
        prod = jacobi_theta_product(qpow(1), qpow(3), 20)
        assert out.agrees_with(prod)

    def test_sum_equals_product_form_randomized(self):
        rnd = random.Random(314)
        for _ in range(50):
            c = rnd.choice([1, -1, 2, Fraction(1, 2)])
            e = Fraction(rnd.randint(1, 12), rnd.choice([1, 2, 5, 7]))
            b = Fraction(rnd.randint(1, 4), rnd.choice([1, 2]))
            x = mono(c, e)
            s = jacobi_theta(x, qpow(b), 15)
            p = jacobi_theta_product(x, qpow(b), 15)
            assert s.agrees_with(p), f"x={x} base=q^{b}"

    def test_negative_exponent_argument(self):
        x = mono(1, Fraction(-3, 5))
        s = jacobi_theta(x, qpow(1), 12)
        want = bilateral_theta(1, Fraction(-3, 5), 1, 12)
        assert_dict_eq(series_to_dict(s), want, 12)

    def test_shift_law(self):
        # j(q^2 x; q) = q^(-1) x^(-2) j(x; q)
        rnd = random.Random(11)
        for _ in range(10):
            e = Fraction(rnd.randint(1, 6), 7)
            x = mono(rnd.choice([1, -1, 2]), e)
            lhs = jacobi_theta(qpow(2) * x, qpow(1), 20)
            rhs = jacobi_theta(x, qpow(1), 24).mul_monomial(
                (x ** -2) * qpow(-1)
            )
            assert lhs.agrees_with(rhs)

    def test_reflection_law(self):
        x = mono(2, Fraction(3, 7))
        lhs = jacobi_theta(x, qpow(1), 20)
        assert lhs.agrees_with(jacobi_theta(qpow(1) * x.inverse(), qpow(1), 20))
        rhs = jacobi_theta(x.inverse(), qpow(1), 22).mul_monomial(-x)
        assert lhs.agrees_with(rhs)


class TestNamedSpecializations:
    def test_J12_product_formula(self):
        j1, j2 = Jm(1, 32), Jm(2, 32)
        assert J(1, 2, 30).agrees_with((j1 * j1 * j2.invert()).truncate(30))

    def test_Jbar01_product_formula(self):
        j1, j2 = Jm(1, 32), Jm(2, 32)
        rhs = (j2 * j2 * j1.invert()) * 2
        assert Jbar(0, 1, 30).agrees_with(rhs.truncate(30))

    def test_Jm_is_euler_product(self):
        out = Jm(1, 13)
        assert series_to_dict(out) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}
        out3 = Jm(3, 26)
        want = product_side_pochhammer(1, 3, 3, 26)
        assert_dict_eq(series_to_dict(out3), want, 26)

    def test_substitute_power_matches_rebased_product(self):
        j1 = Jm(1, 10)
        assert j1.substitute_power(3).agrees_with(Jm(3, 30))

    def test_rebased_J_kwarg(self):
        # J(a, m, base=B) computes j(B^a; B^m)
        B = mono(-1, Fraction(1, 2))
        direct = jacobi_theta(B ** 1, B ** 2, 15)
        assert J(1, 2, 15, base=B).agrees_with(direct)
        assert Jm(2, 15, base=B).agrees_with(
            jacobi_theta(B ** 2, B ** 6, 15)
        )

    def test_order_monotonicity_across_theta_layer(self):
        x, b = mono(-1, Fraction(2, 7)), qpow(1)
        assert jacobi_theta(x, b, 12).agrees_with(jacobi_theta(x, b, 40))
        assert pochhammer_infinite(x, b, 12).agrees_with(pochhammer_infinite(x, b, 40))


class TestMonomialBase:
    def test_negated_base_theta(self):
        # j(x; -q) = j(x; q^2) j(-qx; q^2) / J_{1,4}
        for x in (mono(-1, 2), mono(2, 3), mono(Fraction(1, 3), 5)):
            lhs = jacobi_theta(x, mono(-1, 1), 25)
            num = jacobi_theta(x, qpow(2), 28) * jacobi_theta(-(qpow(1) * x), qpow(2), 28)
            rhs = num * J(1, 4, 28).invert()
            assert lhs.agrees_with(rhs.truncate(25))

    def test_gaussian_argument_evaluations(self):
        i = GaussianRational(0, 1)
        lhs = jacobi_theta(mono(i, 0), qpow(1), 20)
        assert lhs.agrees_with(J(1, 4, 20) * GaussianRational(1, -1))
        assert jacobi_theta(mono(i, 1), qpow(2), 20).agrees_with(J(4, 8, 20))

    def test_imaginary_parts_cancel_at_i_sqrt_q(self):
        s = jacobi_theta(mono(GaussianRational(0, 1), Fraction(1, 2)), qpow(1), 12)
        assert all(c.im == 0 for c in s.terms.values())
