"""Command-line front end.

Exit codes: 0 ProvenHyponormal, 1 NotHyponormal, 2 Inconclusive (for
``check``/``mellin``); 0 success for the other commands (``reproduce``
returns 1 when a reproduced value disagrees); 64 for parse and usage
errors; 3 for any other error. ``BERGMAN_HYPO_THREADS`` caps the BLAS /
LAPACK thread pools.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from fractions import Fraction

from threadpoolctl import threadpool_limits

from .arith import DEFAULT_CHECK_LIMIT, GaussianRational, format_fraction
from .criteria import (binomial_phase_analysis, check, check_liu_lu, construct_thm37,
                       two_term_margin_function)
from .criteria.mellin import DEFAULT_ALPHA_CHECK, mellin_row
from .errors import HypoError, ParseError, UnknownExample
from .operator import (DEFAULT_SECTION, MAX_SECTION, ORTHONORMAL, WITNESS_THRESHOLD, CoefficientVector,
                       commutator_form_float, norm_sq_exact, commutator_matrix)
from .spectral import DEFAULT_GRID, monomial_commutator_norm, norm_report
from .symbol import Monomial, Polar, SymbolPoly, format_symbol, parse_symbol, radial_profile

EXIT_USAGE = 64
EXIT_ERROR = 3

log = logging.getLogger("hypotoeplitz")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item"):
        return obj.item()
    return obj


def _emit(args, payload: dict, human: list[str]):
    if args.format == "json":
        print(json.dumps(_jsonable(payload), indent=2))
    else:
        print("\n".join(human))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _verdict_lines(v) -> list[str]:
    lines = [v.summary()]
    if v.certificate is not None:
        c = v.certificate
        for a, b in c.ranges_checked:
            lines.append(f"  checked exactly: {a}..{b}")
        if c.tail is not None:
            lines.append(f"  tail: {c.tail.tag} beyond {c.tail.checked_up_to}")
        if c.note:
            lines.append(f"  note: {c.note}")
    if v.violation is not None:
        vi = v.violation
        lines.append(f"  violation: {vi.criterion} at index {vi.index}"
                     + (f" (lhs {_fmt(vi.lhs)} < rhs {_fmt(vi.rhs)})" if vi.lhs is not None else ""))
    if v.witness is not None:
        w = v.witness
        val = f"{_fmt(w.exact_value)} ~ {float(w.exact_value):.12g} (exact, units of pi)" if w.exact else \
            f"{_fmt(w.float_value)} +- {w.float_error:.3g} (units of pi)"
        lines.append(f"  witness: basis={w.vector.basis} offset={w.vector.offset} "
                     f"length={len(w.vector.entries)} form={val}")
        if w.exact:
            q = w.exact_value / norm_sq_exact(w.vector)
            lines.append(f"  Rayleigh quotient form/||u||^2 = {float(q):.12g}")
    if v.reason:
        lines.append(f"  reason: {v.reason}")
    if "sources" in v.details:
        lines.append("  criteria: " + ", ".join(f"{n}={t}" for n, t in v.details["sources"]))
    return lines


def cmd_check(args) -> int:
    s = parse_symbol(args.symbol)
    v = check(s, size=args.size, max_size=max(args.size, args.max_size), alpha_check=args.alpha_max,
              check_limit=args.k_max, threshold=args.tolerance)
    payload = dict(v.to_json(), symbol=format_symbol(s))
    _emit(args, payload, [f"symbol: {format_symbol(s)}"] + _verdict_lines(v))
    return v.exit_code


def cmd_mellin(args) -> int:
    s = parse_symbol(args.symbol)
    v = check_liu_lu(s, args.alpha_max, check_limit=args.k_max)
    prof = radial_profile(s)
    rows = [mellin_row(prof, a) for a in range(prof.delta, args.alpha_max + 1)] if prof.delta > 0 else []
    if args.format == "csv":
        print("alpha,c_squared,lhs_sq,rhs_sq,holds")
        for r in rows:
            print(f"{r.alpha},{_fmt(r.c_squared)},{_fmt(r.lhs_sq)},{_fmt(r.rhs_sq)},{str(r.holds).lower()}")
        return v.exit_code
    human = [f"symbol: {format_symbol(s)}", f"delta: {radial_profile(s).delta}"]
    human += [f"  alpha={r.alpha:>4}  c^2={_fmt(r.c_squared)}  |M+|^2={_fmt(r.lhs_sq)}  "
              f"c^2|M-|^2={_fmt(r.rhs_sq)}  {'ok' if r.holds else 'FAILS'}" for r in rows]
    human += _verdict_lines(v)
    _emit(args, dict(v.to_json(), rows=[r.to_json() for r in rows]), human)
    return v.exit_code


def cmd_matrix(args) -> int:
    s = parse_symbol(args.symbol)
    mat = commutator_matrix(s, args.size)
    if args.format == "csv":
        sys.stdout.write(mat.to_csv())
    elif args.format == "json":
        print(json.dumps(mat.to_json()))
    else:
        d = mat.dense()
        for row in d:
            print("  ".join(_fmt(float(z.real)) if z.imag == 0 else f"{z.real:.12g}{z.imag:+.12g}i" for z in row))
    return 0


def cmd_norm(args) -> int:
    s = parse_symbol(args.symbol)
    rep = norm_report(s, args.size, args.grid)
    human = [f"symbol: {format_symbol(s)}",
             f"  exact sup:            {_fmt(rep.exact_sup) if rep.exact_sup is not None else '-'}",
             f"  section lower bound:  {_fmt(rep.section_lower_bound)} (size {rep.section_size})"]
    if rep.putnam_upper is not None:
        human += [f"  Area/pi estimate:     {_fmt(rep.putnam_upper)} (grid {rep.grid})",
                  f"  Area/(2pi) estimate:  {_fmt(rep.half_area_conjecture)}"]
    _emit(args, rep.to_json(), human)
    return 0


def cmd_construct(args) -> int:
    rep = construct_thm37(args.n, args.delta, check_limit=args.k_max)
    human = [f"n={rep.n} delta={rep.delta}", f"  q_sup = {_fmt(rep.q_sup)}", f"  j = {rep.j}",
             f"  symbol: {format_symbol(rep.symbol)}"] + ["  " + l for l in _verdict_lines(rep.verdict)]
    _emit(args, rep.to_json(), human)
    return 0


# ---------------------------------------------------------------------------
# reproduction suite
# ---------------------------------------------------------------------------


def _check_line(ok: bool, text: str) -> str:
    return f"{'PASS' if ok else 'FAIL'}: {text}"


def _rep_ex31():
    lines, ok_all = [], True
    u = CoefficientVector([0.5, 0.5], ORTHONORMAL)
    vals = {}
    for label, C in (("0", 0.0), ("-1", -1.0), ("-2*sqrt(2)", -2 * math.sqrt(2)), ("-3", -3.0)):
        terms = [(1, 0, 1)]
        if C:
            terms.append((1, 1, Polar(Fraction(abs(C)), math.pi)))
        val, err = commutator_form_float(SymbolPoly(terms), u)
        ref = 1 / 6 + C / (12 * math.sqrt(2))
        ok = abs(val - ref) <= 1e-12
        ok_all &= ok
        vals[C] = val
        lines.append(_check_line(ok, f"C={label}: form {val:.15g} vs 1/6 + C/(12 sqrt 2) = {ref:.15g}"))
    slope = vals[0.0] - vals[-1.0]
    root = -vals[0.0] / slope
    ok = abs(root + 2 * math.sqrt(2)) <= 1e-12
    ok_all &= ok
    lines.append(_check_line(ok, f"zero of the affine curve at C = {root:.15g} (-2 sqrt 2 = {-2 * math.sqrt(2):.15g})"))
    v = check(parse_symbol("z + (-3)|z|^2"))
    ok = v.not_hyponormal and v.witness is not None and v.witness.exact
    ok_all &= ok
    lines.append(_check_line(ok, f"check(z - 3|z|^2): {v.summary()}"))
    return ok_all, lines


REFERENCE_EX35_NUM = (927168, 2228760, 2061168, 985764, 267977, 41785, 3475, 119)


def _rep_ex35():
    from .arith import RationalFunction, RationalPoly
    from .criteria import check_thm35
    f = Monomial(2, 1, GaussianRational(1))
    g = Monomial(3, 4, GaussianRational(Fraction(1, 7)))
    v = check_thm35(f, g)
    lines = [_check_line(v.proven_hyponormal, f"check_thm35(z^2 zb, (1/7) zb^4 z^3): {v.summary()}")]
    margin = two_term_margin_function(f, g)
    k = RationalPoly.x()
    den = RationalPoly([49]) * (k + 6) * (k + 5) ** 2 * (k + 4) ** 2 * (k + 3) ** 2 * (k + 2) ** 2 * (k + 1)
    num = (margin * RationalFunction(den)).num
    lines.append(f"computed margin numerator over 49(k+6)(k+5)^2(k+4)^2(k+3)^2(k+2)^2(k+1): "
                 f"{[_fmt(c) for c in reversed(num.coefficients)]}")
    lines.append(f"reference numerator: {list(reversed(REFERENCE_EX35_NUM))}")
    match = margin == RationalFunction(RationalPoly(REFERENCE_EX35_NUM), den)
    lines.append(_check_line(match, "margin equals the reference rational function"))
    return v.proven_hyponormal and match, lines


def _rep_ex4():
    s = parse_symbol("z^2 zb - z^3 zb^2")
    v = check_liu_lu(s, 10)
    prof = radial_profile(s)
    lines = [f"alpha={r.alpha}: |M+|^2={_fmt(r.lhs_sq)}  c^2|M-|^2={_fmt(r.rhs_sq)}  {'ok' if r.holds else 'fails'}"
             for r in (mellin_row(prof, a) for a in range(1, 6))]
    ok = v.not_hyponormal and v.violation.index == 2
    lines.append(_check_line(ok, f"check_liu_lu: {v.summary()}"))
    from .operator import find_refutation
    w = find_refutation(s, 16)
    ok2 = w is not None and w.exact and w.exact_value < 0
    lines.append(_check_line(ok2, f"finite-section witness at size 16: "
                                  f"{_fmt(w.exact_value) if w else 'none'}"))
    return ok and ok2, lines


def _rep_ex45():
    pa = binomial_phase_analysis(1, (2, 1), Fraction(1, 10), (3, 2), DEFAULT_ALPHA_CHECK)
    lines = [f"alpha={r.alpha}: F(+1)={_fmt(r.F_endpoints[0])}  F(-1)={_fmt(r.F_endpoints[1])}"
             for r in pa.rows[:5]]
    ok = pa.all_theta.proven_hyponormal
    lines.append(_check_line(ok, f"all phases: {pa.all_theta.summary()}"))
    lines.append(f"extra necessity condition: {pa.condition}")
    return ok, lines


def _rep_norm_table():
    lines, ok_all = [], True
    for m in range(1, 11):
        row = []
        for n in range(m):
            w = monomial_commutator_norm(m, n)
            ok_all &= w <= Fraction(1, 2)
            row.append(_fmt(w))
        lines.append(f"m={m:>2}: " + " ".join(row))
    lines.append(_check_line(ok_all, "every monomial commutator norm is <= 1/2"))
    return ok_all, lines


REPRODUCTIONS = {"ex3.1": _rep_ex31, "ex3.5-rational": _rep_ex35, "ex4-counter": _rep_ex4,
                 "ex4.5": _rep_ex45, "thm5.1": _rep_norm_table}


def cmd_reproduce(args) -> int:
    if args.example not in REPRODUCTIONS:
        raise UnknownExample(f"unknown example {args.example!r}; known: {', '.join(REPRODUCTIONS)}")
    ok, lines = REPRODUCTIONS[args.example]()
    _emit(args, {"example": args.example, "pass": ok, "lines": lines}, [f"[{args.example}]"] + lines)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--size", type=int, default=DEFAULT_SECTION, help="finite-section size")
    common.add_argument("--alpha-max", type=int, default=DEFAULT_ALPHA_CHECK,
                        help="last index checked row by row before the tail certificate")
    common.add_argument("--k-max", type=int, default=DEFAULT_CHECK_LIMIT,
                        help="exhaustive range of the tail-positivity test")
    common.add_argument("--grid", type=int, default=DEFAULT_GRID, help="area raster resolution")
    common.add_argument("--tolerance", type=float, default=WITNESS_THRESHOLD,
                        help="eigenvalue threshold before a witness is certified")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="hypotoeplitz", description="Hyponormality of Bergman-space Toeplitz operators "
                                                 "with polynomial symbols in z and zb.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = sub.add_parser("check", parents=[common], help="decide / certify / refute hyponormality")
    c.add_argument("symbol")
    c.add_argument("--max-size", type=int, default=MAX_SECTION)
    c.set_defaults(func=cmd_check)
    r = sub.add_parser("reproduce", parents=[common], help="rerun a reference computation")
    r.add_argument("example", help=", ".join(REPRODUCTIONS))
    r.set_defaults(func=cmd_reproduce)
    m = sub.add_parser("matrix", parents=[common], help="finite section of the self-commutator")
    m.add_argument("symbol")
    m.set_defaults(func=cmd_matrix)
    n = sub.add_parser("norm", parents=[common], help="commutator norm and area estimates")
    n.add_argument("symbol")
    n.set_defaults(func=cmd_norm)
    k = sub.add_parser("construct", parents=[common], help="build a hyponormal hypo + cohypo binomial")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--delta", type=int, required=True)
    k.set_defaults(func=cmd_construct)
    me = sub.add_parser("mellin", parents=[common], help="Mellin-transform criterion table")
    me.add_argument("symbol")
    me.set_defaults(func=cmd_mellin)
    return p


def _threads() -> int | None:
    raw = os.environ.get("BERGMAN_HYPO_THREADS")
    if not raw:
        return None
    try:
        return max(1, int(raw))
    except ValueError:
        log.warning("ignoring BERGMAN_HYPO_THREADS=%r", raw)
        return None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        with threadpool_limits(limits=_threads()):
            return args.func(args)
    except ParseError as e:
        print(f"parse error at position {e.position}: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownExample as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except HypoError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
