"""Acceptance criteria 1-10.

Each test records one ``CRITERION n: PASS|FAIL - detail`` line (shown in the
pytest terminal summary, and printed directly when this file is run as a
script) and then asserts the criterion. Criteria whose stated values cannot
be reproduced are left failing.
"""

import logging
import math
import random
import time
from fractions import Fraction as F

import pytest

from hypotoeplitz.arith import DEFAULT_CHECK_LIMIT, GaussianRational, RationalFunction, RationalPoly
from hypotoeplitz.criteria import (binomial_phase_analysis, check, check_harmonic_binomial, check_liu_lu,
                                   check_monomial, check_thm35, construct_thm37, two_term_margin_function)
from hypotoeplitz.criteria.monomial import monomial_numerator
from hypotoeplitz.operator import (ORTHONORMAL, CoefficientVector, commutator_form_float, commutator_matrix,
                                   find_refutation)
from hypotoeplitz.spectral import (estimate_image_area, monomial_commutator_norm, projection_norm_sq,
                                   section_norm)
from hypotoeplitz.symbol import Monomial, Polar, SymbolPoly, parse_symbol

log = logging.getLogger("acceptance")


def _record(report, n, ok, detail):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    report(line)
    print(line)
    return ok


def mono(m, n, c=1):
    return Monomial(m, n, GaussianRational.coerce(c))


def test_criterion_1_affine_curve(acceptance_report):
    t0 = time.perf_counter()
    u = CoefficientVector([0.5, 0.5], ORTHONORMAL)
    errs = []
    for C in (0.0, -1.0, -2 * math.sqrt(2), -3.0):
        terms = [(1, 0, 1)] + ([(1, 1, Polar(F(abs(C)), math.pi))] if C else [])
        val, _ = commutator_form_float(SymbolPoly(terms), u)
        errs.append(abs(val - (1 / 6 + C / (12 * math.sqrt(2)))))
    v = check(parse_symbol("z + (-3)|z|^2"))
    dt = time.perf_counter() - t0
    ok = max(errs) <= 1e-12 and v.not_hyponormal and v.witness is not None and v.witness.exact \
        and v.witness.exact_value < 0 and dt < 1
    _record(acceptance_report, 1, ok, f"max curve error {max(errs):.2e}; C=-3 {v.summary()[:40]}...; {dt:.2f}s")
    assert ok


def _horner(coeffs, k):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def test_criterion_2_monomials(acceptance_report):
    t0 = time.perf_counter()
    bad = []
    for m in range(11):
        for n in range(m + 1):
            v = check_monomial(mono(m, n))
            num = monomial_numerator(m, n)
            coeffs = [int(c) for c in num.coefficients]   # integer polynomial
            exhaustive = all(_horner(coeffs, k) >= 0 for k in range(m - n, 10 ** 4 + 1))
            if not (v.proven_hyponormal and exhaustive and (m == n or m == 0 or v.certificate.tail.positive)):
                bad.append((m, n))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    _record(acceptance_report, 2, ok, f"66 monomials, failures {bad}, k <= {DEFAULT_CHECK_LIMIT} + tail; {dt:.2f}s")
    assert ok


def test_criterion_3_worked_example(acceptance_report):
    t0 = time.perf_counter()
    f, g = mono(2, 1), mono(3, 4, F(1, 7))
    v = check_thm35(f, g)
    k = RationalPoly.x()
    den = 49 * (k + 6) * (k + 5) ** 2 * (k + 4) ** 2 * (k + 3) ** 2 * (k + 2) ** 2 * (k + 1)
    reference = RationalFunction(RationalPoly([927168, 2228760, 2061168, 985764, 267977, 41785, 3475, 119]), den)
    margin = two_term_margin_function(f, g)
    ours = (margin * RationalFunction(den)).num
    equal = margin == reference
    dt = time.perf_counter() - t0
    ok = v.proven_hyponormal and v.theorem_id == "HypoCoHypo35" and equal and dt < 1
    _record(acceptance_report, 3, ok,
            f"verdict {v.summary()}; margin numerator over the reference denominator = "
            f"{[str(c) for c in reversed(ours.coefficients)]}, reference (119, 3475, ...), equal={equal}; "
            f"at k=2: {float(margin(2)):.5f} vs {float(reference(2)):.5f}")
    assert ok


def test_criterion_4_counterexample(acceptance_report):
    s = parse_symbol("z^2 zb - z^3 zb^2")
    v = check_liu_lu(s)
    exact = v.violation is not None and (v.violation.lhs, v.violation.rhs) == (F(1, 3600), F(1, 3200))
    size = next((N for N in (4, 8, 16, 32) if find_refutation(s, N) is not None), None)
    w = find_refutation(s, size) if size else None
    ok = v.not_hyponormal and v.violation.index == 2 and exact and w is not None and w.exact and w.exact_value < 0
    _record(acceptance_report, 4, ok, f"first violation alpha={v.violation.index} "
            f"(1/3600 < 1/3200: {exact}); exact witness at section size {size}")
    assert ok


def test_criterion_5_phase_example(acceptance_report):
    pa = binomial_phase_analysis(1, (2, 1), F(1, 10), (3, 2), 200)
    endpoints = len(pa.rows) == 200 and all(r.F_endpoints[0] > 0 and r.F_endpoints[1] > 0 for r in pa.rows)
    all_theta = pa.all_theta.proven_hyponormal
    thetas = [r.theta_alpha for r in pa.rows if r.alpha >= 10]
    defined = all(t is not None for t in thetas)
    monotone = defined and all(a > b for a, b in zip(thetas, thetas[1:])) and abs(thetas[-1] - math.pi / 2) < 0.1
    ok = endpoints and all_theta and monotone
    _record(acceptance_report, 5, ok,
            f"F(+1), F(-1) > 0 for alpha=1..200 exactly: {endpoints}; tail => all theta: {all_theta}; "
            f"theta_alpha defined for alpha>=10: {defined} (the inequality holds for every phase, so no "
            f"crossing angle exists); monotone toward pi/2: {monotone}")
    assert ok


def test_criterion_6_norm_sweep(acceptance_report):
    t0 = time.perf_counter()
    worst, max_norm, dev = None, F(0), 0.0
    for m in range(1, 26):
        for n in range(m):
            w = monomial_commutator_norm(m, n)
            max_norm = max(max_norm, w)
            dev = max(dev, abs(section_norm(SymbolPoly.monomial(m, n), 500) - float(w)))
            if w > F(1, 2):
                worst = (m, n, w)
    equal = all(monomial_commutator_norm(k, 0) == F(1, 2) for k in range(1, 6))
    dt = time.perf_counter() - t0
    ok = worst is None and equal and dev <= 1e-8 and dt < 60
    _record(acceptance_report, 6, ok, f"max norm {max_norm} over 0<=n<m<=25; (k,0) -> 1/2: {equal}; "
            f"section deviation at N=500 {dev:.1e}; {dt:.1f}s")
    assert ok


def test_criterion_7_harmonic_threshold(acceptance_report):
    eps = F(1, 10 ** 9)
    at = check_harmonic_binomial(1, 2, F(1, 2)).proven_hyponormal
    below = check_harmonic_binomial(1, 2, F(1, 2) - eps).proven_hyponormal
    above = check_harmonic_binomial(1, 2, F(1, 2) + eps).not_hyponormal
    s = SymbolPoly([(1, 0, 1), (0, 2, F(51, 100))])
    size = next((N for N in (50, 100, 200, 400) if find_refutation(s, N) is not None), None)
    ok = at and below and above and size is not None
    _record(acceptance_report, 7, ok, f"proven at 1/2 and 1/2-1e-9: {at and below}; refuted at 1/2+1e-9: "
            f"{above}; finite-section refutation at 0.51 with size {size}")
    assert ok


def test_criterion_8_construction(acceptance_report):
    rep = construct_thm37(1, 1)
    lam, _ = commutator_matrix(rep.symbol, 300).min_eig()
    ok = rep.j == 4 and rep.q_sup == F(11, 3) and rep.verdict.proven_hyponormal and lam >= -1e-10
    _record(acceptance_report, 8, ok, f"j={rep.j}, q_sup={rep.q_sup}, {rep.verdict.summary()}, "
            f"min eigenvalue at N=300 {lam:.3e}")
    assert ok


def _corpus(count=200, seed=20240501):
    rng = random.Random(seed)
    out = set()
    while len(out) < count:
        d = rng.randint(-3, 3)
        t = rng.randint(1, 3)
        ns = rng.sample(range(max(0, -d), 7 - max(d, 0)), min(t, 7 - abs(d)))
        terms = [(n + d, n, F(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))) for n in ns]
        s = SymbolPoly(terms)
        if not s.is_zero():
            out.add(s)
    return sorted(out, key=str)


def test_criterion_9_soundness(acceptance_report):
    t0 = time.perf_counter()
    disagreements, unsound, counts, conjecture = [], [], {}, []
    for s in _corpus():
        v = check_liu_lu(s)
        counts[v.tag] = counts.get(v.tag, 0) + 1
        w = find_refutation(s, 300)
        if (v.proven_hyponormal and w is not None) or (v.not_hyponormal and not (v.witness and v.witness.exact_value < 0)):
            disagreements.append(str(s))
        if v.proven_hyponormal:
            lam, _ = commutator_matrix(s, 300).min_eig()
            if lam < -1e-10:
                unsound.append((str(s), lam))
            try:
                area = estimate_image_area(s, 256).area_over_2pi
                if section_norm(s, 300) > area * 1.02:
                    conjecture.append(str(s))
                    log.warning("norm exceeds Area/(2 pi) for %s", s)
            except Exception:   # degenerate images are not part of the monitor
                pass
    dt = time.perf_counter() - t0
    ok = not disagreements and not unsound and dt < 300
    _record(acceptance_report, 9, ok, f"200 symbols {counts}; disagreements {len(disagreements)}; "
            f"proven with negative section eigenvalue {len(unsound)}; Area/(2pi) monitor flags "
            f"{len(conjecture)} (logged only); {dt:.1f}s")
    assert ok


def test_criterion_10_projection(acceptance_report):
    exact = all(projection_norm_sq(m, n) == F(m - n + 1, (m + 1) ** 2) for m in range(11) for n in range(m + 1))
    vanish = all(projection_norm_sq(m, n) == 0 for m in range(11) for n in range(m + 1, 11))
    worst = 0.0
    for m in range(1, 7):
        for n in range(m):
            a = estimate_image_area(SymbolPoly.monomial(m, n)).area_over_pi
            worst = max(worst, float(projection_norm_sq(m, n)) / a)
    ok = exact and vanish and worst <= 1.02
    _record(acceptance_report, 10, ok, f"formula exact for 0<=n<=m<=10: {exact}; zero for m<n: {vanish}; "
            f"max ||P||^2/pi over Area/pi ratio {worst:.3f} (<= 1.02)")
    assert ok


if __name__ == "__main__":   # pragma: no cover
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
