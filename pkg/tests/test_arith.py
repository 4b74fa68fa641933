from fractions import Fraction as F

import pytest

from hypotoeplitz.arith import (GaussianRational, RationalFunction, RationalPoly, format_fraction,
                                poly_nonneg_on_integer_ray, rational_fn_sup_on_ray)

k = RationalPoly.x()


def test_gaussian_rational_arithmetic():
    a = GaussianRational(F(1, 2), 3)
    b = GaussianRational(2, -1)
    assert a * b == GaussianRational(F(1, 2) * 2 + 3, F(-1, 2) + 6)
    assert (a / b) * b == a
    assert a.conjugate().conjugate() == a
    assert a.abs2() == F(1, 4) + 9
    assert complex(a) == 0.5 + 3j
    assert GaussianRational.coerce(F(3, 7)).is_real()


def test_poly_algebra():
    p = (k + 1) * (k - 2)
    assert p.coefficients == (F(-2), F(-1), F(1))
    assert p(3) == 4
    q, r = p.divmod(k + 1)
    assert q == k - 2 and r.is_zero()
    assert p.shift(1)(0) == p(1)
    assert (k ** 3).degree == 3


def test_rational_function_normalises():
    f = RationalFunction((k + 1) * (k + 2), (k + 1) * (k + 3))
    assert f == RationalFunction(k + 2, k + 3)
    assert f(0) == F(2, 3)
    assert (f - f) == RationalFunction(0)


def test_positive_all_coefficients():
    assert poly_nonneg_on_integer_ray(RationalPoly([8, 3]), 0).tag == "PositiveOnRay"


def test_reference_degree7_numerator_positive():
    p = RationalPoly([927168, 2228760, 2061168, 985764, 267977, 41785, 3475, 119])
    assert poly_nonneg_on_integer_ray(p, 0).positive


def test_negative_at_start():
    v = poly_nonneg_on_integer_ray(RationalPoly([-5, 1]), 0, 10)
    assert v.tag == "NegativeAt" and v.negative_at == 0


def test_negative_deep_in_ray():
    # (k - 500)^2 - 1 is negative only at k = 500
    v = poly_nonneg_on_integer_ray((k - 500) ** 2 - 1, 0, 10_000)
    assert v.tag == "NegativeAt" and v.negative_at == 500


def test_negative_leading_coefficient_is_negative_eventually():
    v = poly_nonneg_on_integer_ray(RationalPoly([10 ** 6, 0, -1]), 0, 100)
    assert not v.positive


def test_zero_polynomial_nonnegative_not_strict():
    assert poly_nonneg_on_integer_ray(RationalPoly([]), 0).positive
    assert not poly_nonneg_on_integer_ray(RationalPoly([]), 0, strict=True).positive


@pytest.mark.parametrize("num,den,K,expected", [
    (RationalPoly([5, 3]), RationalPoly([1, 1]), 2, F(11, 3)),
    (RationalPoly([7]), RationalPoly([1]), 0, F(7)),
    # (k(m+d) + mn + m + d)/(k + n - d + 1) with m=2, n=1, d=1
    (k * 3 + 2 + 2 + 1, k + 1, 2, F(11, 3)),
])
def test_sup_on_ray(num, den, K, expected):
    assert rational_fn_sup_on_ray(num, den, K) == expected


def test_sup_on_ray_matches_brute_force():
    num, den = RationalPoly([5, 3]), RationalPoly([1, 1])
    assert rational_fn_sup_on_ray(num, den, 2) == max(num(j) / den(j) for j in range(2, 10_001))


def test_format_fraction():
    assert format_fraction(F(-3, 7)) == "-3/7"
    assert format_fraction(F(4)) == "4"
