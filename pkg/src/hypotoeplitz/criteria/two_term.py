"""Sufficient conditions for two-term symbols ``f + g`` with monomials
``f = a z^{m_f} zb^{n_f}``, ``g = b z^{m_g} zb^{n_g}``.

Write ``d_f = m_f - n_f >= d_g = m_g - n_g`` (swap otherwise) and
``D = d_f - d_g``. In the monomial basis

    <[T*, T] u, u> / pi = sum_k (|a|^2 diag_f(k) + |b|^2 diag_g(k)) |u_k|^2
                          + 2 Re sum_k a conj(b) C_k u_k conj(u_{k+D})

with

    C_k = [k + d_f >= 0] (k + d_f + 1) / ((k + m_f + 1)(k + D + m_g + 1))
        - [k - d_g >= 0] (k - d_g + 1) / ((k - d_g + m_f + 1)(k - d_g + m_g + 1)).

Bounding each cross term by ``|ab| |C_k| (|u_k|^2 + |u_{k+D}|^2)`` and
collecting the coefficient of ``|u_k|^2`` gives the per-index margin

    margin_k = |a|^2 diag_f(k) + |b|^2 diag_g(k) - |ab| (|C_k| + [k >= D] |C_{k-D}|),

and ``T_{f+g}`` is hyponormal when every margin is nonnegative. From
``K0`` on (see :func:`tail_start`) every indicator is constant, so the
margin is one rational function whose sign on the ray is certified
exactly; indices below ``K0`` are checked one by one.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import (DEFAULT_CHECK_LIMIT, GaussianRational, RationalFunction, RationalPoly,
                     rational_fn_sup_on_ray)
from ..errors import ConstructionFailed, ExactnessViolation, PreconditionViolated
from ..symbol import Monomial, SymbolPoly
from .monomial import check_monomial, diag_function, diag_value
from .verdict import Verdict, rf_nonneg_on_ray, rf_sign_on_ray

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossTermBounds:
    """Row ``k`` for two hyponormal-type terms: the cross coefficient
    ``C_k`` of ``u_k conj(u_{k+D})`` and its partner ``D_k = C_{k-D}``
    (zero for ``k < D``), which also weighs ``|u_k|^2``."""

    k: int
    C_k: Fraction
    D_k: Fraction
    margin: Fraction | None = None


@dataclass(frozen=True)
class TildeBounds:
    """Row ``k`` for a hyponormal term plus a cohyponormal term:
    ``A = |a|^2 diag_f(k) >= 0``, ``B = -|b|^2 diag_g(k) >= 0``, the cross
    coefficient ``C`` and its partner ``D``."""

    k: int
    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    margin: Fraction | None = None


def _exact(t: Monomial) -> GaussianRational:
    if not t.exact:
        raise ExactnessViolation("two-term criteria need Gaussian-rational coefficients")
    return t.coeff


def _order(f: Monomial, g: Monomial) -> tuple[Monomial, Monomial]:
    return (f, g) if f.delta >= g.delta else (g, f)


def cross_coefficient(f: Monomial, g: Monomial, k: int) -> Fraction:
    """``C_k`` for ``d_f >= d_g`` (zero for ``k < 0``)."""
    if k < 0:
        return Fraction(0)
    df, dg = f.delta, g.delta
    D = df - dg
    val = Fraction(0)
    if k + df >= 0:
        val += Fraction(k + df + 1, (k + f.m + 1) * (k + D + g.m + 1))
    q = k - dg
    if q >= 0:
        val -= Fraction(q + 1, (q + f.m + 1) * (q + g.m + 1))
    return val


def cross_function(f: Monomial, g: Monomial) -> RationalFunction:
    """``C_k`` as a rational function, valid for ``k >= max(0, d_g, -d_f)``."""
    df, dg = f.delta, g.delta
    D = df - dg
    k = RationalPoly.x()
    first = RationalFunction(k + (df + 1), (k + (f.m + 1)) * (k + (D + g.m + 1)))
    q = k + (-dg)
    second = RationalFunction(q + 1, (q + (f.m + 1)) * (q + (g.m + 1)))
    return first - second


def tail_start(f: Monomial, g: Monomial) -> int:
    """First index from which every indicator in the margin is constant."""
    df, dg = f.delta, g.delta
    D = df - dg
    base = max(0, dg, -df)
    return max(abs(df), abs(dg), D, base, D + base)


def _partner(f, g, k) -> Fraction:
    D = f.delta - g.delta
    if D == 0:
        return cross_coefficient(f, g, k)
    return cross_coefficient(f, g, k - D) if k >= D else Fraction(0)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass
class _Margin:
    a2: Fraction
    b2: Fraction
    ab2: Fraction
    ab: Fraction | None

    def ok(self, lin: Fraction, cross: Fraction) -> bool:
        """``lin - |ab| cross >= 0`` with ``cross >= 0``."""
        if self.ab is not None:
            return lin - self.ab * cross >= 0
        return lin >= 0 and lin * lin >= self.ab2 * cross * cross

    def value(self, lin, cross) -> Fraction | None:
        return lin - self.ab * cross if self.ab is not None else None


def _row_parts(f, g, k, mg: _Margin):
    lin = mg.a2 * diag_value(f.m, f.n, k) + mg.b2 * diag_value(g.m, g.n, k)
    c, d = cross_coefficient(f, g, k), _partner(f, g, k)
    return lin, abs(c) + abs(d), c, d


def two_term_margin_function(f: Monomial, g: Monomial) -> RationalFunction:
    """Margin on ``k >= tail_start`` as a rational function, when ``|ab|``
    is rational and the cross coefficients keep a certified sign there."""
    f, g = _order(f, g)
    a, b = _exact(f), _exact(g)
    ab = _rational_sqrt(a.abs2() * b.abs2())
    if ab is None:
        raise ValueError("|ab| is irrational; the margin is not a rational function")
    K0 = tail_start(f, g)
    lin, cross, _ = _tail_pieces(f, g, K0, DEFAULT_CHECK_LIMIT)
    if cross is None:
        raise ValueError("cross-coefficient sign is not constant on the ray")
    return lin - cross * ab


def _tail_pieces(f, g, K, check_limit):
    a2, b2 = f.coeff.abs2(), g.coeff.abs2()
    lin = diag_function(f.m, f.n) * a2 + diag_function(g.m, g.n) * b2
    C = cross_function(f, g)
    D = f.delta - g.delta
    Cs = C if D == 0 else C.shift(-D)
    sc = rf_sign_on_ray(C, K, check_limit)
    sd = rf_sign_on_ray(Cs, K, check_limit)
    if sc == 0 or sd == 0:
        return lin, None, (sc, sd)
    return lin, C * sc + Cs * sd, (sc, sd)


def _two_term(f: Monomial, g: Monomial, theorem_id: str, row_kind: str, *,
              check_limit: int = DEFAULT_CHECK_LIMIT, rows: int = 20) -> Verdict:
    f, g = _order(f, g)
    a, b = _exact(f), _exact(g)
    mg = _Margin(a.abs2(), b.abs2(), a.abs2() * b.abs2(), _rational_sqrt(a.abs2() * b.abs2()))

    K0 = tail_start(f, g)
    lin_rf, cross_rf, signs = _tail_pieces(f, g, K0, check_limit)
    start = K0 if cross_rf is not None else check_limit
    if cross_rf is None:
        lin_rf, cross_rf, signs = _tail_pieces(f, g, start, check_limit)
        if cross_rf is None:
            return Verdict.inconclusive("cross coefficients change sign beyond the checked range")

    table = []
    for k in range(0, max(start, rows)):
        lin, cross, c, d = _row_parts(f, g, k, mg)
        ok = mg.ok(lin, cross)
        if k < rows or not ok:
            val = mg.value(lin, cross)
            if row_kind == "tilde":
                table.append(TildeBounds(k, mg.a2 * diag_value(f.m, f.n, k),
                                         -mg.b2 * diag_value(g.m, g.n, k), c, d, val))
            else:
                table.append(CrossTermBounds(k, c, d, val))
        if k < start and not ok:
            return Verdict.inconclusive(f"sufficient condition fails at k={k}", rows=table,
                                        failing_k=k)

    if mg.ab is not None:
        margin = lin_rf - cross_rf * mg.ab
        tail = rf_nonneg_on_ray(margin, start, check_limit)
    else:
        margin = None
        t1 = rf_nonneg_on_ray(lin_rf, start, check_limit)
        sq = lin_rf * lin_rf - cross_rf * cross_rf * mg.ab2
        tail = rf_nonneg_on_ray(sq, start, check_limit) if t1.positive else t1
    details = dict(rows=table, margin=margin, tail_start=start, cross_signs=signs)
    if tail.tag == "NegativeAt":
        return Verdict.inconclusive(f"sufficient condition fails at k={tail.negative_at}",
                                    failing_k=tail.negative_at, **details)
    if not tail.positive:
        return Verdict.inconclusive(f"tail certificate {tail.tag}", **details)
    ranges = [(0, start - 1)] if start > 0 else []
    ranges.append((start, tail.checked_up_to))
    return Verdict.proven(theorem_id, ranges, tail, **details)


def _merge_if_same(f: Monomial, g: Monomial | None):
    if g is None:
        return SymbolPoly([f])
    if (f.m, f.n) == (g.m, g.n):
        return SymbolPoly([f, g])
    return None


def check_thm33(f: Monomial, g: Monomial | None, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> Verdict:
    """Sum of two hyponormal-type monomials (``m_f > n_f`` and
    ``m_g > n_g``): sufficient condition, ``Inconclusive`` when it fails."""
    if f.m <= f.n or (g is not None and g.m <= g.n):
        raise PreconditionViolated("both terms need more z than zb")
    merged = _merge_if_same(f, g)
    if merged is not None:
        return check_monomial(merged, check_limit=check_limit)
    return _two_term(f, g, "SumHypo33", "cross", check_limit=check_limit)


def check_thm35(f: Monomial, g: Monomial | None, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> Verdict:
    """Hyponormal-type ``f`` (``m_f > n_f``) plus cohyponormal-type ``g``
    (more ``zb`` than ``z``): sufficient condition."""
    if f.m <= f.n or (g is not None and g.m >= g.n):
        raise PreconditionViolated("need f with more z than zb and g with more zb than z")
    if g is None:
        return check_monomial(SymbolPoly([f]), check_limit=check_limit)
    return _two_term(f, g, "HypoCoHypo35", "tilde", check_limit=check_limit)


def margin_rows(f: Monomial, g: Monomial, k_max: int) -> list[Fraction | None]:
    """Exact margins ``k = 0..k_max`` (``None`` where ``|ab|`` is irrational)."""
    f, g = _order(f, g)
    a, b = _exact(f), _exact(g)
    mg = _Margin(a.abs2(), b.abs2(), a.abs2() * b.abs2(), _rational_sqrt(a.abs2() * b.abs2()))
    return [mg.value(*_row_parts(f, g, k, mg)[:2]) for k in range(k_max + 1)]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


@dataclass
class ConstructionReport:
    n: int
    delta: int
    j: int
    q_sup: Fraction
    symbol: SymbolPoly
    verdict: Verdict
    attempts: list[tuple[int, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        from ..arith import format_fraction
        from ..symbol import format_symbol
        return {"n": self.n, "delta": self.delta, "j": self.j, "q_sup": format_fraction(self.q_sup),
                "symbol": format_symbol(self.symbol), "verdict": self.verdict.to_json(),
                "attempts": [{"j": j, "tag": t} for j, t in self.attempts]}


def construction_bound(n: int, delta: int) -> tuple[RationalPoly, RationalPoly]:
    """Numerator and denominator of
    ``q(k) = (k(m+delta) + mn + m + delta) / (k + n - delta + 1)``, ``m = n + delta``."""
    m = n + delta
    num = RationalPoly([m * n + m + delta, m + delta])
    den = RationalPoly([n - delta + 1, 1])
    return num, den


def construct_thm37(n: int, delta: int, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> ConstructionReport:
    """Build ``z^{n+delta} zb^n + (1/(2j+delta)) zb^{j+delta} z^j`` with the
    smallest admissible ``j`` whose two-term margin certificate succeeds."""
    if n < 1 or delta < 1:
        raise PreconditionViolated("need n >= 1 and delta >= 1")
    m = n + delta
    num, den = construction_bound(n, delta)
    q_sup = rational_fn_sup_on_ray(num, den, 2 * delta, check_limit=check_limit)
    j = max(m, math.floor(q_sup)) + 1
    cap = 10 * (math.ceil(q_sup) + m)
    f = Monomial(m, n, GaussianRational(1))
    attempts = []
    while j <= cap:
        g = Monomial(j, j + delta, GaussianRational(Fraction(1, 2 * j + delta)))
        v = check_thm35(f, g, check_limit=check_limit)
        attempts.append((j, v.tag))
        if v.proven_hyponormal:
            v = Verdict.proven("Construct37", v.certificate.ranges_checked, v.certificate.tail,
                               note="via HypoCoHypo35 margin certificate", **v.details)
            return ConstructionReport(n, delta, j, q_sup, SymbolPoly([f, g]), v, attempts)
        j += 1
    raise ConstructionFailed(f"no certified j up to {cap} for n={n}, delta={delta}")
