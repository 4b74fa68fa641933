"""Criteria for symbols of fixed relative degree ``delta``.

Such a symbol is ``e^{i delta t} phi0(r)`` and its self-commutator is
diagonal in the monomial basis. With ``M(s) = sum a_t / (s + p_t)``
(``p_t = m_t + n_t``; the Mellin transform of ``phi0``) the diagonal entry
on ``z^a`` is

    <[T*, T] z^a, z^a> / pi = 4 [(a + delta + 1) |M(2a + delta + 2)|^2
                                 - [a >= delta] (a - delta + 1) |M(2a - delta + 2)|^2],

so hyponormality is equivalent to the bracket being nonnegative for every
integer ``a >= delta`` (for ``a < delta`` it is a sum of squares).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..arith import (DEFAULT_CHECK_LIMIT, GaussianRational, RationalFunction, RationalPoly,
                     format_fraction)
from ..errors import ExactnessViolation, NegativeDelta, NotFixedDegree, PoleHit, PreconditionViolated
from ..operator import CoefficientVector, certify_witness
from ..symbol import Polar, RadialProfile, SymbolPoly, classify, radial_profile
from .verdict import CriterionViolation, Verdict, rf_nonneg_on_ray

log = logging.getLogger(__name__)

DEFAULT_ALPHA_CHECK = 200


def mellin_hat(profile: RadialProfile, s) -> GaussianRational:
    """``sum a / (s + p)`` over the profile components."""
    s = Fraction(s)
    acc = GaussianRational()
    for p, a in profile.components:
        if isinstance(a, Polar):
            raise ExactnessViolation("Mellin values need Gaussian-rational coefficients")
        if s + p == 0:
            raise PoleHit(f"s = {format_fraction(s)} hits the pole at -{p}")
        acc += a / (s + p)
    return acc


def mellin_abs2_function(profile: RadialProfile, shift: int, scale: int = 2) -> RationalFunction:
    """``|M(scale*x + shift)|^2`` as a rational function of ``x``."""
    x = RationalPoly.x()
    total = RationalFunction(0)
    comps = profile.components
    for p, a in comps:
        for q, b in comps:
            w = (a * b.conjugate()).re
            if w:
                total = total + RationalFunction(RationalPoly([w]),
                                                 (x * scale + (shift + p)) * (x * scale + (shift + q)))
    return total


@dataclass(frozen=True)
class MellinCheckRow:
    alpha: int
    c_squared: Fraction
    lhs_sq: Fraction
    rhs_sq: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs_sq >= self.rhs_sq

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "c_squared": format_fraction(self.c_squared),
                "lhs_sq": format_fraction(self.lhs_sq), "rhs_sq": format_fraction(self.rhs_sq),
                "holds": self.holds}


def mellin_row(profile: RadialProfile, alpha: int) -> MellinCheckRow:
    d = profile.delta
    c2 = Fraction(alpha - d + 1, alpha + d + 1)
    lhs = mellin_hat(profile, 2 * alpha + d + 2).abs2()
    rhs = c2 * mellin_hat(profile, 2 * alpha - d + 2).abs2()
    return MellinCheckRow(alpha, c2, lhs, rhs)


def liu_lu_function(profile: RadialProfile) -> RationalFunction:
    """``(a+d+1)|M(2a+d+2)|^2 - (a-d+1)|M(2a-d+2)|^2`` in the variable ``a``."""
    d = profile.delta
    x = RationalPoly.x()
    return (mellin_abs2_function(profile, d + 2) * RationalFunction(x + (d + 1))
            - mellin_abs2_function(profile, 2 - d) * RationalFunction(x + (1 - d)))


def _fixed_profile(s: SymbolPoly) -> RadialProfile:
    cls = classify(s)
    if not cls.fixed_degree:
        raise NotFixedDegree(f"{s} has no fixed relative degree")
    return radial_profile(s)


def _diagonal_witness(s: SymbolPoly, k: int):
    return certify_witness(s, CoefficientVector.basis_vector(k))


def check_liu_lu(s: SymbolPoly, alpha_check: int = DEFAULT_ALPHA_CHECK, *,
                 check_limit: int = DEFAULT_CHECK_LIMIT) -> Verdict:
    """Exact Mellin-transform decision for fixed relative degree symbols.

    ``delta > 0``: the squared inequality is checked for
    ``delta <= alpha <= alpha_check`` and the remaining ray is certified on
    the cleared-denominator polynomial. ``delta = 0``: the operator is
    diagonal with normal entries, hence normal. ``delta < 0``: the diagonal is
    scanned for an exactly negative entry.
    """
    profile = _fixed_profile(s)
    if not profile.exact:
        raise ExactnessViolation("check_liu_lu needs Gaussian-rational coefficients; "
                                 "use binomial_phase_analysis for free phases")
    d = profile.delta
    if s.is_zero():
        return Verdict.proven("SelfAdjointDelta0", note="zero symbol")
    if d == 0:
        return Verdict.proven("SelfAdjointDelta0", note="radial symbol: diagonal, hence normal")
    if d < 0:
        for k in range(0, alpha_check + 1):
            w = _diagonal_witness(s, k)
            if w is not None:
                return Verdict.refuted(witness=w, reason=f"negative diagonal entry at z^{k}")
        return Verdict.inconclusive(f"no negative diagonal entry for k <= {alpha_check}")

    rows = []
    for alpha in range(d, max(alpha_check, d) + 1):
        row = mellin_row(profile, alpha)
        rows.append(row)
        if not row.holds:
            return Verdict.refuted(
                violation=CriterionViolation("LiuLu41", alpha, row.lhs_sq, row.rhs_sq),
                witness=_diagonal_witness(s, alpha), rows=rows)
    start = rows[-1].alpha + 1
    tail = rf_nonneg_on_ray(liu_lu_function(profile), start, check_limit)
    if tail.tag == "NegativeAt":
        row = mellin_row(profile, tail.negative_at)
        return Verdict.refuted(
            violation=CriterionViolation("LiuLu41", row.alpha, row.lhs_sq, row.rhs_sq),
            witness=_diagonal_witness(s, row.alpha), rows=rows)
    if not tail.positive:
        return Verdict.inconclusive(f"tail certificate {tail.tag}", rows=rows)
    return Verdict.proven("LiuLu41", [(d, rows[-1].alpha), (start, tail.checked_up_to)], tail, rows=rows)


# ---------------------------------------------------------------------------
# quarter-plane test
# ---------------------------------------------------------------------------


def _direction(c):
    if isinstance(c, Polar):
        return math.cos(c.phase), math.sin(c.phase)
    return c.re, c.im


def quarter_plane_start(coeffs) -> int | None:
    """Index of a coefficient ``v`` such that every other coefficient lies in
    the closed quarter-plane from ``arg v`` to ``arg v + pi/2``."""
    dirs = [_direction(c) for c in coeffs]
    for i, (sx, sy) in enumerate(dirs):
        if all(sx * vy - sy * vx >= 0 and sx * vx + sy * vy >= 0 for vx, vy in dirs):
            return i
    return None


def check_quarter_plane(s: SymbolPoly) -> Verdict:
    """Sufficient test: fixed degree ``delta >= 0`` and all coefficients in
    one closed quarter-plane. Exact sign tests for Gaussian rationals;
    float angles for polar coefficients."""
    profile = _fixed_profile(s)
    if profile.delta < 0:
        raise NegativeDelta("quarter-plane test needs delta >= 0")
    coeffs = [t.coeff for t in s.terms]
    tid = "QuarterPlane43" if len(coeffs) == 2 else "QuarterPlane46"
    if len(coeffs) <= 1:
        return Verdict.proven(tid, note="at most one term")
    start = quarter_plane_start(coeffs)
    if start is None:
        return Verdict.inconclusive("coefficients do not fit in one quarter-plane")
    exact = all(not isinstance(c, Polar) for c in coeffs)
    return Verdict.proven(tid, note=("exact" if exact else "float-angle") + " quarter-plane test",
                          start_term=start)


# ---------------------------------------------------------------------------
# two-term phase analysis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PhaseAnalysisRow:
    """``F(x) = A^2 + R^2 + 2ARx - c^2 (B^2 + S^2 + 2BSx)`` at ``alpha``,
    ``x = cos(theta)``; ``theta_alpha`` is the root in ``[0, pi]`` (``None``
    when ``F`` keeps one sign)."""

    alpha: int
    theta_alpha: float | None
    F_endpoints: tuple[Fraction, Fraction]

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "theta_alpha": self.theta_alpha,
                "F_plus": format_fraction(self.F_endpoints[0]),
                "F_minus": format_fraction(self.F_endpoints[1])}


@dataclass
class PhaseAnalysis:
    rows: list[PhaseAnalysisRow]
    all_theta: Verdict
    condition: str
    theta_verdicts: dict[float, Verdict] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "all_theta": self.all_theta.to_json(),
                "condition": self.condition,
                "theta_verdicts": {repr(t): v.to_json() for t, v in self.theta_verdicts.items()}}


class _PhaseData:
    def __init__(self, a1, mn, r2, ij):
        self.a1, self.r2 = Fraction(a1), Fraction(r2)
        (self.m, self.n), (self.i, self.j) = mn, ij
        self.d = self.m - self.n
        if self.i - self.j != self.d or self.d <= 0:
            raise PreconditionViolated("need m - n = i - j = delta > 0")
        if self.a1 <= 0 or self.r2 <= 0:
            raise PreconditionViolated("need a1 > 0 and r2 > 0")

    def parts(self, alpha: int):
        A = self.a1 / (alpha + self.m + 1)
        R = self.r2 / (alpha + self.i + 1)
        B = self.a1 / (alpha + self.n + 1)
        S = self.r2 / (alpha + self.j + 1)
        c2 = Fraction(alpha - self.d + 1, alpha + self.d + 1)
        return A, R, B, S, c2

    def F(self, alpha: int, x: Fraction) -> Fraction:
        A, R, B, S, c2 = self.parts(alpha)
        return A * A + R * R + 2 * A * R * x - c2 * (B * B + S * S + 2 * B * S * x)

    def affine(self, alpha: int) -> tuple[Fraction, Fraction]:
        A, R, B, S, c2 = self.parts(alpha)
        return A * A + R * R - c2 * (B * B + S * S), 2 * (A * R - c2 * B * S)

    def cleared(self, x: Fraction) -> RationalFunction:
        """``(alpha + d + 1) F(x)`` as a rational function of ``alpha``."""
        k = RationalPoly.x()

        def inv(c):
            return RationalFunction(1, k + c)

        A, R = inv(self.m + 1) * self.a1, inv(self.i + 1) * self.r2
        B, S = inv(self.n + 1) * self.a1, inv(self.j + 1) * self.r2
        lhs = (A * A + R * R + A * R * (2 * x)) * RationalFunction(k + (self.d + 1))
        rhs = (B * B + S * S + B * S * (2 * x)) * RationalFunction(k + (1 - self.d))
        return lhs - rhs

    def condition_functions(self):
        k = RationalPoly.x()
        low = RationalFunction(self.a1, k + (self.m + 1)) - RationalFunction(self.r2, k + (self.i + 1))
        high = (RationalFunction(self.a1, k + (self.n + 1)) - RationalFunction(self.r2, k + (self.j + 1))) \
            * RationalFunction(k + (1 - self.d), k + (self.d + 1))
        return low, high - low


def _theta_alpha(F0: Fraction, F1: Fraction) -> float | None:
    if F1 == 0:
        return None
    x = -F0 / F1
    if -1 <= x <= 1:
        return math.acos(float(x))
    return None


def _holds_on_ray(data: _PhaseData, x: Fraction, alpha_max: int, check_limit: int):
    """``(True, None)`` if ``F(x) >= 0`` for all ``alpha >= delta``;
    ``(False, alpha)`` at the first exact failure; ``(None, None)`` otherwise."""
    for alpha in range(data.d, alpha_max + 1):
        if data.F(alpha, x) < 0:
            return False, alpha
    start = max(alpha_max, data.d - 1) + 1
    tail = rf_nonneg_on_ray(data.cleared(x), start, check_limit)
    if tail.positive:
        return True, tail
    if tail.tag == "NegativeAt":
        return False, tail.negative_at
    return None, None


def _condition_status(data: _PhaseData, alpha_max: int, check_limit: int) -> str:
    low, gap = data.condition_functions()
    for alpha in range(data.d, alpha_max + 1):
        if low(alpha) < 0 or gap(alpha) <= 0:
            return f"fails at alpha={alpha}"
    start = alpha_max + 1
    t1 = rf_nonneg_on_ray(low, start, check_limit)
    t2 = rf_nonneg_on_ray(gap, start, check_limit, strict=True)
    if t1.positive and t2.positive:
        return "holds"
    for t in (t1, t2):
        if t.tag == "NegativeAt":
            return f"fails at alpha={t.negative_at}"
    return "inconclusive"


COS_ENCLOSURE = Fraction(1, 2 ** 50)


def binomial_phase_analysis(a1, term1: tuple[int, int], r2, term2: tuple[int, int],
                            alpha_max: int = DEFAULT_ALPHA_CHECK, thetas=(), *,
                            check_limit: int = DEFAULT_CHECK_LIMIT) -> PhaseAnalysis:
    """Phase dependence of ``a1 z^m zb^n + r2 e^{i theta} z^i zb^j``.

    ``F`` is affine in ``x = cos(theta)``, so the inequality holds for every
    phase iff it holds at ``x = +1`` and ``x = -1``; both are decided
    exactly (rows up to ``alpha_max`` plus a tail certificate). For each
    requested ``theta`` the verdict evaluates ``F`` at the two ends of a
    rational enclosure of ``cos(theta)``.
    """
    data = _PhaseData(a1, term1, r2, term2)
    rows = []
    for alpha in range(data.d, alpha_max + 1):
        F0, F1 = data.affine(alpha)
        rows.append(PhaseAnalysisRow(alpha, _theta_alpha(F0, F1), (F0 + F1, F0 - F1)))

    plus = _holds_on_ray(data, Fraction(1), alpha_max, check_limit)
    minus = _holds_on_ray(data, Fraction(-1), alpha_max, check_limit)
    if plus[0] and minus[0]:
        all_theta = Verdict.proven("QuarterPlane43", [(data.d, alpha_max), (alpha_max + 1, minus[1].checked_up_to)],
                                   minus[1], note="F(+1) and F(-1) nonnegative for every alpha: all phases")
    elif plus[0] is False or minus[0] is False:
        which = "+1" if plus[0] is False else "-1"
        idx = plus[1] if plus[0] is False else minus[1]
        all_theta = Verdict.inconclusive(f"inequality fails at cos(theta)={which}, alpha={idx}: "
                                         "not hyponormal for every phase")
    else:
        all_theta = Verdict.inconclusive("tail certificate inconclusive")

    verdicts = {}
    for theta in thetas:
        c = Fraction(math.cos(theta))
        lo, hi = max(c - COS_ENCLOSURE, Fraction(-1)), min(c + COS_ENCLOSURE, Fraction(1))
        r_lo = _holds_on_ray(data, lo, alpha_max, check_limit)
        r_hi = _holds_on_ray(data, hi, alpha_max, check_limit)
        if r_lo[0] and r_hi[0]:
            verdicts[theta] = Verdict.proven("LiuLu41", [(data.d, alpha_max)], r_lo[1],
                                             note=f"phase {theta!r} via cos enclosure [{float(lo)}, {float(hi)}]")
        elif r_lo[0] is False and r_hi[0] is False and r_lo[1] == r_hi[1]:
            alpha = r_lo[1]
            verdicts[theta] = Verdict.refuted(
                violation=CriterionViolation("LiuLu41", alpha, max(data.F(alpha, lo), data.F(alpha, hi)), Fraction(0)),
                reason=f"F < 0 on the whole cos enclosure at alpha={alpha}")
        else:
            verdicts[theta] = Verdict.inconclusive("phase at the boundary of the enclosure")
    return PhaseAnalysis(rows, all_theta, _condition_status(data, alpha_max, check_limit), verdicts)
