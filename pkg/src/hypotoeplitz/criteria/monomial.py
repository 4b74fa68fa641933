"""Single monomials ``a z^m zb^n``: the self-commutator is diagonal in the
monomial basis: ``<[T*, T] z^k, z^k> / pi = |a|^2 * diag_value(m, n, k)``."""

from __future__ import annotations

from fractions import Fraction

from ..arith import DEFAULT_CHECK_LIMIT, RationalFunction, RationalPoly, poly_nonneg_on_integer_ray
from ..operator import CoefficientVector, certify_witness
from ..symbol import Monomial, SymbolPoly
from .verdict import Verdict


def diag_value(m: int, n: int, k: int) -> Fraction:
    """``(||T z^k||^2 - ||T* z^k||^2) / pi`` for ``T = T_{z^m zb^n}``."""
    d = m - n
    val = Fraction(0)
    if k + d >= 0:
        val += Fraction(k + d + 1, (k + m + 1) ** 2)
    if k - d >= 0:
        val -= Fraction(k - d + 1, (k + n + 1) ** 2)
    return val


def diag_function(m: int, n: int) -> RationalFunction:
    """:func:`diag_value` as a rational function of ``k``, valid for
    ``k >= |m - n|``."""
    d = m - n
    k = RationalPoly.x()
    first = RationalFunction(k + (d + 1), (k + (m + 1)) ** 2)
    second = RationalFunction(k + (1 - d), (k + (n + 1)) ** 2)
    return first - second


def monomial_numerator(m: int, n: int) -> RationalPoly:
    """Cleared numerator ``(k+d+1)(k+n+1)^2 - (k-d+1)(k+m+1)^2`` of the
    diagonal entry on ``k >= d = m - n``."""
    d = m - n
    k = RationalPoly.x()
    return (k + (d + 1)) * (k + (n + 1)) ** 2 - (k + (1 - d)) * (k + (m + 1)) ** 2


def _as_monomial(mono) -> Monomial | None:
    if isinstance(mono, Monomial):
        return mono
    if isinstance(mono, SymbolPoly):
        if mono.is_zero():
            return None
        if len(mono) != 1:
            raise ValueError("check_monomial expects a single term")
        return mono.terms[0]
    raise TypeError(f"expected Monomial or SymbolPoly, got {type(mono).__name__}")


def check_monomial(mono, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> Verdict:
    """Exact decision for one term: hyponormal iff ``m >= n``.

    For ``m >= n`` the diagonal entries are positive by inspection for
    ``k < m - n`` (checked anyway) and equal the cleared numerator
    :func:`monomial_numerator` over a positive denominator afterwards, which
    is certified nonnegative on the whole ray. For ``m < n`` the vector
    ``z^{n-m}`` is returned as an exact witness.
    """
    t = _as_monomial(mono)
    if t is None:
        return Verdict.proven("Monomial32", note="zero symbol")
    m, n = t.m, t.n
    d = m - n
    if d >= 0:
        ranges = []
        if d > 0:
            if any(diag_value(m, n, k) <= 0 for k in range(d)):
                raise AssertionError("initial diagonal entries must be positive")  # pragma: no cover
            ranges.append((0, d - 1))
        tail = poly_nonneg_on_integer_ray(monomial_numerator(m, n), d, max(check_limit, d))
        if not tail.positive:
            return Verdict.inconclusive(f"tail certificate: {tail.tag}")
        ranges.append((d, tail.checked_up_to))
        return Verdict.proven("Monomial32", ranges, tail)

    sym = SymbolPoly([t])
    u = CoefficientVector.basis_vector(-d)
    if t.exact:
        w = certify_witness(sym, u)
    else:
        w = certify_witness(sym, CoefficientVector.basis_vector(-d, "orthonormal", 1.0))
    if w is None:  # pragma: no cover - the value is strictly negative
        return Verdict.inconclusive("witness z^(n-m) not certified")
    return Verdict.refuted(witness=w, reason="more zb than z: T* has the larger norm on z^(n-m)")


__all__ = ["check_monomial", "diag_value", "diag_function", "monomial_numerator"]
