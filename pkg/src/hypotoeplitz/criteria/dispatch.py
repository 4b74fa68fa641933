"""``check``: route a symbol to every applicable criterion and combine.

Order: single monomial; exact fixed degree (Mellin criterion, decisive);
free-phase binomials of fixed degree (phase analysis); quarter-plane test;
harmonic binomial thresholds; two-term sufficient conditions. A finite
section refutation scan always runs as well. An exact refutation beats a
proof (and is logged as an inconsistency, since it signals a bug); any
proof beats ``Inconclusive``.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from ..arith import DEFAULT_CHECK_LIMIT, GaussianRational
from ..operator import DEFAULT_SECTION, MAX_SECTION, WITNESS_THRESHOLD, find_refutation, scan_refutation
from ..symbol import Polar, SymbolPoly, classify
from .harmonic import check_harmonic_binomial
from .mellin import DEFAULT_ALPHA_CHECK, binomial_phase_analysis, check_liu_lu, check_quarter_plane
from .monomial import check_monomial
from .two_term import check_thm33, check_thm35
from .verdict import INCONCLUSIVE, PROVEN, REFUTED, Verdict

log = logging.getLogger(__name__)


def _modulus(c) -> Fraction:
    if isinstance(c, Polar):
        return c.modulus
    return Fraction(abs(complex(c)))


def _phase(c) -> float:
    import cmath
    return c.phase if isinstance(c, Polar) else cmath.phase(complex(c))


def _criteria(s: SymbolPoly, alpha_check: int, check_limit: int):
    terms = s.terms
    cls = classify(s)
    if len(terms) == 1:
        yield "monomial", lambda: check_monomial(terms[0], check_limit=check_limit)
        return
    if cls.fixed_degree:
        if s.exact:
            yield "liu_lu", lambda: check_liu_lu(s, alpha_check, check_limit=check_limit)
        elif len(terms) == 2 and cls.delta > 0:
            t1, t2 = terms

            def phase():
                theta = _phase(t2.coeff) - _phase(t1.coeff)
                pa = binomial_phase_analysis(_modulus(t1.coeff), (t1.m, t1.n), _modulus(t2.coeff),
                                             (t2.m, t2.n), alpha_check, (theta,), check_limit=check_limit)
                return pa.theta_verdicts[theta]
            yield "phase_analysis", phase
        if cls.delta >= 0:
            yield "quarter_plane", lambda: check_quarter_plane(s)
        return
    if not s.exact or len(terms) != 2:
        return
    t1, t2 = terms
    if cls.tag == "Harmonic":
        ana = [t for t in terms if t.n == 0]
        co = [t for t in terms if t.m == 0]
        if len(ana) == 1 and len(co) == 1:
            a, b = ana[0], co[0]
            yield "harmonic_binomial", lambda: check_harmonic_binomial(
                a.m, b.n, b.coeff / a.coeff, check_limit=check_limit)
    hypo = [t for t in terms if t.m > t.n]
    cohypo = [t for t in terms if t.m < t.n]
    if len(hypo) == 2:
        yield "thm33", lambda: check_thm33(t1, t2, check_limit=check_limit)
    elif len(hypo) == 1 and len(cohypo) == 1:
        yield "thm35", lambda: check_thm35(hypo[0], cohypo[0], check_limit=check_limit)


def check(s: SymbolPoly, *, size: int = DEFAULT_SECTION, max_size: int = MAX_SECTION,
          alpha_check: int = DEFAULT_ALPHA_CHECK, check_limit: int = DEFAULT_CHECK_LIMIT,
          scan: bool = True, threshold: float = WITNESS_THRESHOLD) -> Verdict:
    """Decide (or certify, or refute) hyponormality of ``T_s``.

    ``threshold`` is the eigenvalue level below which a finite-section
    eigenvector is promoted to a witness candidate.
    """
    core = s.without_constant()   # constants do not change the commutator
    if core.is_zero():
        return Verdict.proven("SelfAdjointDelta0", note="constant symbol", sources=[])

    results: list[tuple[str, Verdict]] = []
    for name, run in _criteria(core, alpha_check, check_limit):
        v = run()
        log.debug("%s -> %s", name, v.summary())
        results.append((name, v))
        if v.tag == REFUTED or (v.tag == PROVEN and name in ("monomial", "liu_lu")):
            break
    sources = [(n, v.tag) for n, v in results]
    refuted = [v for _, v in results if v.tag == REFUTED]
    proven = [v for _, v in results if v.tag == PROVEN]
    if refuted:
        return _with(refuted[0], sources=sources)

    if proven:
        w = find_refutation(core, size, threshold=threshold) if scan else None
        if w is not None:
            log.error("criterion proof contradicted by a certified witness for %s", s)
            return Verdict.refuted(witness=w, reason="finite-section witness contradicts "
                                   f"{proven[0].theorem_id}", sources=sources, section_size=size)
        return _with(proven[0], sources=sources)

    if not scan:
        return Verdict.inconclusive("no criterion applies", sources=sources)
    w, last = scan_refutation(core, size, max_size, threshold=threshold)
    sources.append(("finite_section", REFUTED if w else INCONCLUSIVE))
    if w is not None:
        return Verdict.refuted(witness=w, reason=f"finite-section witness (size {w.section_size})",
                               sources=sources, section_size=w.section_size)
    reasons = "; ".join(f"{n}: {v.reason}" for n, v in results if v.reason)
    return Verdict.inconclusive(
        f"no certificate; no refutation up to section size {last}" + (f" ({reasons})" if reasons else ""),
        sources=sources, section_size=last)


def _with(v: Verdict, **extra) -> Verdict:
    v.details.update(extra)
    return v


def rotate(s: SymbolPoly, unit: GaussianRational) -> SymbolPoly:
    """``unit * s`` (used for rotation-invariance checks)."""
    return s.scale(unit)
