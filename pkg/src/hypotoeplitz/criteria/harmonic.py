"""Harmonic binomials ``z^n + alpha zb^m``.

Coanalytic Toeplitz operators commute with each other (and analytic ones
likewise), so the cross terms cancel and the self-commutator is diagonal:

    <[T*, T] z^k, z^k> / pi = diag(n, 0, k) + |alpha|^2 diag(0, m, k).

Hyponormality holds iff ``|alpha|^2 <= (m+1)/(n+1)`` when ``m <= n`` and
``|alpha|^2 <= n^2/m^2`` when ``m >= n``.
"""

from __future__ import annotations

from fractions import Fraction

from ..arith import DEFAULT_CHECK_LIMIT, GaussianRational, poly_nonneg_on_integer_ray
from ..errors import PreconditionViolated
from ..operator import CoefficientVector, certify_witness
from ..symbol import SymbolPoly
from .monomial import diag_function
from .verdict import CriterionViolation, Verdict


def harmonic_threshold_sq(n: int, m: int) -> Fraction:
    return Fraction(m + 1, n + 1) if m <= n else Fraction(n * n, m * m)


def harmonic_symbol(n: int, m: int, alpha) -> SymbolPoly:
    return SymbolPoly([(n, 0, 1), (0, m, GaussianRational.coerce(alpha))])


def harmonic_diagonal(n: int, m: int, alpha2: Fraction):
    """Diagonal entries on ``k >= max(n, m)`` as a rational function."""
    return diag_function(n, 0) + diag_function(0, m) * alpha2


def check_harmonic_binomial(n: int, m: int, alpha, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> Verdict:
    """Exact threshold comparison; a refutation also carries the first basis
    vector ``z^k`` on which the diagonal is negative, when one is found
    within ``check_limit`` (the violation index is that ``k``, or -1)."""
    if n < 1 or m < 1:
        raise PreconditionViolated("need n, m >= 1")
    alpha = GaussianRational.coerce(alpha)
    a2 = alpha.abs2()
    thr = harmonic_threshold_sq(n, m)
    if a2 <= thr:
        return Verdict.proven("HarmonicBinomial",
                              note=f"|alpha|^2 = {a2} <= {thr}")
    s = harmonic_symbol(n, m, alpha)
    witness = None
    K = max(n, m)
    for k in range(K):
        witness = certify_witness(s, CoefficientVector.basis_vector(k))
        if witness is not None:
            break
    if witness is None:
        rf = harmonic_diagonal(n, m, a2)
        pv = poly_nonneg_on_integer_ray(rf.num * rf.den, K, max(check_limit, K))
        if pv.tag == "NegativeAt":
            witness = certify_witness(s, CoefficientVector.basis_vector(pv.negative_at))
    index = witness.vector.offset if witness is not None else -1
    return Verdict.refuted(violation=CriterionViolation("HarmonicBinomial", index, thr, a2),
                           witness=witness, reason=f"|alpha|^2 = {a2} > {thr}")
