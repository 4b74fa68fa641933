import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.integrate import dblquad

from hypotoeplitz.errors import DegenerateImage, PreconditionViolated
from hypotoeplitz.spectral import (estimate_image_area, monomial_commutator_norm, norm_report,
                                   projection_norm_sq, putnam_area_bound, section_norm)
from hypotoeplitz.symbol import parse_symbol


def test_monomial_norm_examples():
    assert monomial_commutator_norm(1, 0) == F(1, 2)
    assert monomial_commutator_norm(2, 1) == F(2, 9)


def test_monomial_norm_float_scan_oracle():
    m, n = 5, 2
    k = np.arange(0, 10 ** 6, dtype=float)
    d = m - n
    w = (k + 1) * ((k + d + 1) / (k + m + 1) ** 2 - np.where(k >= d, (k - d + 1) / (k + n + 1) ** 2, 0))
    assert abs(w.max() - float(monomial_commutator_norm(m, n))) < 1e-15


def test_monomial_norm_precondition():
    with pytest.raises(PreconditionViolated):
        monomial_commutator_norm(2, 3)


@pytest.mark.parametrize("text,size,expected,tol", [("z", 50, 0.5, 1e-12), ("|z|^2", 20, 0.0, 0.0),
                                                     ("z^2 zb", 100, 2 / 9, 1e-10)])
def test_section_norm(text, size, expected, tol):
    assert abs(section_norm(parse_symbol(text), size) - expected) <= tol


def test_area_of_identity_disk():
    a = estimate_image_area(parse_symbol("z"))
    assert abs(a.area_over_pi - 1) < 0.02


def test_area_of_monomial_is_disk():
    over_pi, over_2pi = putnam_area_bound(parse_symbol("z^3 zb"))
    assert abs(over_pi - 1) < 0.02 and over_2pi >= float(monomial_commutator_norm(3, 1))


def test_area_scales_quadratically():
    a = estimate_image_area(parse_symbol("3 z + (1/2) z^2"))
    # univalent on the disk (|f'| > 0), area = pi * sum k |a_k|^2
    assert abs(a.area_over_pi - (9 + 2 * 0.25)) / 9.5 < 0.02


def test_degenerate_image():
    with pytest.raises(DegenerateImage):
        estimate_image_area(parse_symbol("(2+1i)"))
    with pytest.raises(DegenerateImage):
        estimate_image_area(parse_symbol("|z|^2"))


@pytest.mark.parametrize("m,n,expected", [(1, 1, F(1, 4)), (0, 3, F(0)), (3, 1, F(3, 16))])
def test_projection_norm_examples(m, n, expected):
    assert projection_norm_sq(m, n) == expected


def test_projection_norm_double_integral():
    # P(z^3 zb) = (3/4) z^2; ||.||^2 / pi by a double integral over the disk in polar form
    val, _ = dblquad(lambda r, t: abs(0.75 * r ** 2) ** 2 * r, 0, 2 * math.pi, 0, 1, epsabs=1e-13)
    assert abs(val / math.pi - 3 / 16) < 1e-12


def test_norm_report_json():
    rep = norm_report(parse_symbol("z^2 zb"), 40, 128)
    j = rep.to_json()
    assert j["exact_sup"] == "2/9" and abs(j["section_lower_bound"] - 2 / 9) < 1e-12
    assert isinstance(j["putnam_upper"], float)


def test_area_over_2pi_bound_fails_for_a_hyponormal_fixed_degree_symbol():
    """phi = (8/7) z^2 - (1/4) z^4 zb^2 = e^{2i theta} g(r) with g increasing,
    so phi(D) is the disk of radius g(1) = 25/28 and Area/(2 pi) = 625/1568.
    The symbol is certified hyponormal, yet the commutator already exceeds
    that value on the basis vector phi_1 (the bound Area/pi still holds)."""
    from hypotoeplitz.criteria import check_liu_lu
    from hypotoeplitz.operator import CoefficientVector, commutator_form_exact
    s = parse_symbol("(8/7) z^2 - (1/4) z^4 zb^2")
    assert check_liu_lu(s).proven_hyponormal
    rayleigh = 2 * commutator_form_exact(s, CoefficientVector.basis_vector(1))
    assert rayleigh == F(1681, 3528) and rayleigh > F(625, 1568)
    area = estimate_image_area(s)
    assert abs(area.area_over_2pi - 625 / 1568) < 0.01
    assert section_norm(s, 200) <= area.area_over_pi
