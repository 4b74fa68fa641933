"""Property-based tests of the algebraic invariants and of soundness."""

from fractions import Fraction as F

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hypotoeplitz.arith import GaussianRational, RationalPoly, poly_nonneg_on_integer_ray, rational_fn_sup_on_ray
from hypotoeplitz.criteria import (check, check_liu_lu, check_thm33, check_thm35, liu_lu_function, margin_rows,
                                   rotate)
from hypotoeplitz.criteria.monomial import diag_function
from hypotoeplitz.operator import (CoefficientVector, commutator_form_exact, commutator_form_float,
                                   commutator_matrix, find_refutation)
from hypotoeplitz.symbol import Monomial, SymbolPoly, conjugate_symbol, format_symbol, parse_symbol, radial_profile

small = st.fractions(min_value=-9, max_value=9, max_denominator=9)
gauss = st.builds(GaussianRational, small, small)
nonzero_gauss = gauss.filter(bool)
exponent = st.integers(0, 5)


@st.composite
def symbols(draw, max_terms=3):
    terms = draw(st.lists(st.tuples(exponent, exponent, nonzero_gauss), min_size=1, max_size=max_terms))
    return SymbolPoly(terms)


@st.composite
def fixed_degree(draw, delta=None):
    d = draw(st.integers(1, 3)) if delta is None else delta
    ns = draw(st.lists(st.integers(0, 6 - d), min_size=1, max_size=3, unique=True))
    cs = draw(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool),
                       min_size=len(ns), max_size=len(ns)))
    return SymbolPoly([(n + d, n, c) for n, c in zip(ns, cs)])


vectors = st.lists(gauss, min_size=1, max_size=5).map(CoefficientVector)
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(symbols())
def test_round_trip(s):
    assert parse_symbol(format_symbol(s)) == s


@SETTINGS
@given(symbols())
def test_conjugation_involution(s):
    assert conjugate_symbol(conjugate_symbol(s)) == s


@SETTINGS
@given(symbols(), vectors)
def test_conjugate_flips_form(s, u):
    assert commutator_form_exact(conjugate_symbol(s), u) == -commutator_form_exact(s, u)


@SETTINGS
@given(symbols(), vectors, st.sampled_from([GaussianRational(0, 1), GaussianRational(F(3, 5), F(4, 5))]))
def test_rotation_invariance_of_form(s, u, unit):
    assert commutator_form_exact(rotate(s, unit), u) == commutator_form_exact(s, u)


@SETTINGS
@given(symbols(), vectors, small.filter(bool))
def test_quadratic_scaling(s, u, lam):
    assert commutator_form_exact(s.scale(GaussianRational(lam)), u) == lam ** 2 * commutator_form_exact(s, u)


@SETTINGS
@given(symbols(), vectors, st.tuples(exponent, exponent).filter(lambda t: t[0] == t[1]).map(lambda t: t[0]),
       small, small)
def test_affine_in_self_adjoint_coefficient(s, u, p, c1, c2):
    """Adding a real multiple of a radial |z|^(2p) term moves the form affinely."""
    def form(c):
        return commutator_form_exact(s + SymbolPoly([(p, p, c)]), u) if c else commutator_form_exact(s, u)
    f0, f1 = form(0), form(1)
    for c in (c1, c2):
        assert form(c) == f0 + c * (f1 - f0)


@SETTINGS
@given(symbols(), vectors)
def test_exact_and_float_paths(s, u):
    exact = commutator_form_exact(s, u)
    val, err = commutator_form_float(s, u.to_orthonormal())
    assert abs(val - float(exact)) <= err + 1e-300


@SETTINGS
@given(symbols(), st.integers(1, 12))
def test_section_hermitian_and_consistent(s, size):
    mat = commutator_matrix(s, size)
    D = mat.dense()
    assert np.allclose(D, D.conj().T, atol=1e-14)
    if size > 1:
        assert np.allclose(commutator_matrix(s, size - 1).dense(), D[:-1, :-1], atol=1e-14)
    # Rayleigh quotient on a basis vector equals the exact diagonal
    k = size - 1
    exact = commutator_form_exact(s, CoefficientVector.basis_vector(k))
    assert abs(D[k, k].real - float(exact) * (k + 1)) < 1e-12


@SETTINGS
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5), st.integers(0, 30))
def test_ray_positivity_matches_brute_force(coeffs, K):
    p = RationalPoly(coeffs)
    v = poly_nonneg_on_integer_ray(p, K, 2000)
    brute = all(p(k) >= 0 for k in range(K, 2001))
    if v.tag == "NegativeAt":
        assert p(v.negative_at) < 0 and all(p(k) >= 0 for k in range(K, v.negative_at))
    elif v.positive:
        assert brute and (p.is_zero() or p.leading > 0 or p.degree == 0)


@SETTINGS
@given(st.integers(1, 9), st.integers(-9, 9), st.integers(1, 9), st.integers(0, 9), st.integers(0, 5))
def test_sup_matches_brute_force(a, b, c, d, K):
    num, den = RationalPoly([b, a]), RationalPoly([d + 1, c])
    sup = rational_fn_sup_on_ray(num, den, K)
    # the supremum is either attained on the ray or is the limit a/c
    assert sup == max(max(num(k) / den(k) for k in range(K, 5000)), F(a, c))


def test_monomial_diagonal_identity():
    k = RationalPoly.x()
    from hypotoeplitz.arith import RationalFunction
    assert diag_function(2, 1) == RationalFunction(3 * k + 8, (k + 3) ** 2 * (k + 2) ** 2)


@SETTINGS
@given(fixed_degree())
def test_liu_lu_function_sign_is_diagonal_sign(s):
    rf = liu_lu_function(radial_profile(s))
    d = radial_profile(s).delta
    for a in range(d, d + 25):
        diag = commutator_form_exact(s, CoefficientVector.basis_vector(a))
        assert (rf(a) > 0) == (diag > 0)


@settings(max_examples=40, deadline=None)
@given(fixed_degree())
def test_liu_lu_sound_against_sections(s):
    v = check_liu_lu(s)
    w = find_refutation(s, 60)
    if v.proven_hyponormal:
        assert w is None
    if w is not None:
        assert not v.proven_hyponormal
    if v.not_hyponormal:
        assert v.witness is not None and v.witness.exact_value < 0


@st.composite
def two_terms(draw, cohypo):
    m = draw(st.integers(1, 5))
    n = draw(st.integers(0, m - 1))
    if cohypo:
        j = draw(st.integers(1, 5))
        i = draw(st.integers(0, j - 1))
    else:
        i = draw(st.integers(1, 5))
        j = draw(st.integers(0, i - 1))
    a = draw(small.filter(bool))
    b = draw(small.filter(bool)) / draw(st.sampled_from([1, 10, 100]))
    return Monomial(m, n, GaussianRational(a)), Monomial(i, j, GaussianRational(b))


@settings(max_examples=40, deadline=None)
@given(st.booleans(), st.data())
def test_two_term_margin_lower_bounds_diagonal(cohypo, data):
    f, g = data.draw(two_terms(cohypo))
    assume((f.m, f.n) != (g.m, g.n))
    s = SymbolPoly([f, g])
    for k, mk in enumerate(margin_rows(f, g, 15)):
        if mk is not None:
            assert mk <= commutator_form_exact(s, CoefficientVector.basis_vector(k))


@settings(max_examples=30, deadline=None)
@given(st.booleans(), st.data())
def test_two_term_certificates_sound(cohypo, data):
    f, g = data.draw(two_terms(cohypo))
    assume((f.m, f.n) != (g.m, g.n))
    v = (check_thm35 if cohypo else check_thm33)(f, g, check_limit=2000)
    if v.proven_hyponormal:
        assert find_refutation(SymbolPoly([f, g]), 80) is None


@settings(max_examples=15, deadline=None)
@given(fixed_degree(), st.sampled_from([GaussianRational(0, 1), GaussianRational(F(3, 5), F(4, 5))]))
def test_rotation_invariance_of_verdict(s, unit):
    a = check(s, size=24, max_size=24)
    b = check(rotate(s, unit), size=24, max_size=24)
    assert a.tag == b.tag
