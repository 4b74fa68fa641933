import math
from fractions import Fraction as F

import pytest

from hypotoeplitz.arith import GaussianRational
from hypotoeplitz.errors import NotFixedDegree, OddAbsolutePower, ParseError
from hypotoeplitz.symbol import (Polar, SymbolPoly, classify, conjugate_symbol, format_symbol,
                                 parse_symbol, radial_profile)


def terms(s):
    return {(t.m, t.n): t.coeff for t in s.terms}


def test_parse_absolute_square():
    assert terms(parse_symbol("z + (-3)|z|^2")) == {(1, 0): GaussianRational(1), (1, 1): GaussianRational(-3)}


def test_parse_difference():
    assert terms(parse_symbol("z^2 zb - z^3 zb^2")) == {(2, 1): GaussianRational(1), (3, 2): GaussianRational(-1)}


def test_cancellation_gives_zero():
    s = parse_symbol("z zb - z zb")
    assert s.is_zero() and len(s) == 0


def test_factor_order_irrelevant():
    assert parse_symbol("(1/7) zb^4 z^3") == parse_symbol("(1/7) z^3 zb^4")


def test_even_absolute_powers():
    assert parse_symbol("|z|^4") == SymbolPoly.monomial(2, 2)


def test_odd_absolute_power_rejected():
    with pytest.raises(OddAbsolutePower) as e:
        parse_symbol("|z|^3")
    assert e.value.position == 0


@pytest.mark.parametrize("text", ["z +", "z^", "(1/0) z", "z ** 2", "w", "z^2 zb)"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as e:
        parse_symbol(text)
    assert 0 <= e.value.position <= len(text)


def test_gaussian_and_polar_coefficients():
    s = parse_symbol("(1+2i) zb^3 + (0+1i)")
    assert terms(s)[(0, 3)] == GaussianRational(1, 2)
    p = parse_symbol("z^2 zb + polar(1/10, pi/3) z^3 zb^2")
    c = terms(p)[(3, 2)]
    assert isinstance(c, Polar) and c.modulus == F(1, 10) and math.isclose(c.phase, math.pi / 3)
    assert not p.exact


@pytest.mark.parametrize("text", ["z - 3 z zb", "-(1/7) z", "(0+1i) + (1+2i) zb^3", "0",
                                  "z^2 zb + (1/7) z^3 zb^4"])
def test_round_trip(text):
    s = parse_symbol(text)
    assert parse_symbol(format_symbol(s)) == s


def test_conjugate_examples():
    s = parse_symbol("z^2 zb")
    assert conjugate_symbol(s) == parse_symbol("z zb^2")
    r = parse_symbol("|z|^2")
    assert conjugate_symbol(r) == r
    ex = parse_symbol("z^2 zb + (1/7) zb^4 z^3")
    assert conjugate_symbol(ex) == parse_symbol("z zb^2 + (1/7) z^4 zb^3")
    g = parse_symbol("(1+2i) z")
    assert conjugate_symbol(g) == parse_symbol("(1-2i) zb")


def test_classify():
    assert classify(parse_symbol("z^2 zb + z^3 zb^2")).tag == "FixedRelativeDegree"
    assert classify(parse_symbol("z^2 zb + z^3 zb^2")).delta == 1
    assert classify(parse_symbol("z + |z|^2")).tag == "General"
    c = classify(parse_symbol("z^5"))
    assert c.tag == "Analytic" and c.delta == 5 and c.fixed_degree
    assert classify(parse_symbol("z + zb^2")).tag == "Harmonic"


def test_radial_profile():
    p = radial_profile(parse_symbol("z^2 zb - z^3 zb^2"))
    assert p.delta == 1 and p.components == ((3, GaussianRational(1)), (5, GaussianRational(-1)))
    assert radial_profile(parse_symbol("|z|^2")).components == ((2, GaussianRational(1)),)
    q = radial_profile(parse_symbol("z^2 zb + polar(1/10, 1) z^3 zb^2"))
    assert q.delta == 1 and q.components[1][0] == 5 and q.components[1][1] == Polar(F(1, 10), 1.0)


def test_radial_profile_requires_fixed_degree():
    with pytest.raises(NotFixedDegree):
        radial_profile(parse_symbol("z + |z|^2"))


def test_polar_modulus_positive():
    with pytest.raises(Exception):
        Polar(F(0), 1.0)
