"""Polynomial symbols ``sum a_i z^{m_i} zb^{n_i}``: parsing, printing,
conjugation, classification and radial profiles.

Grammar (whitespace-insensitive)::

    symbol  := "0" | [sign] term (sign term)*
    term    := [coeff ["*"]] factor (["*"] factor)*  |  coeff
    coeff   := rational ["i"] | "i" | "(" gaussian ")" | "polar(" rational "," angle ")"
    factor  := "z" ["^" int] | "zb" ["^" int] | "|z|^" (int | "(" int ")")

``|z|^(2c)`` is sugar for ``z^c zb^c``; ``angle`` accepts numbers, ``pi``,
``+ - * /`` and parentheses.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .arith import GaussianRational, format_fraction
from .errors import ExactnessViolation, NotFixedDegree, OddAbsolutePower, ParseError


@dataclass(frozen=True)
class Polar:
    """Coefficient ``modulus * exp(i * phase)`` with a floating phase."""

    modulus: Fraction
    phase: float

    def __post_init__(self):
        object.__setattr__(self, "modulus", Fraction(self.modulus))
        object.__setattr__(self, "phase", float(self.phase))
        if self.modulus <= 0:
            raise ValueError("polar modulus must be positive")

    def __complex__(self):
        return float(self.modulus) * cmath.exp(1j * self.phase)

    def conjugate(self) -> "Polar":
        return Polar(self.modulus, -self.phase)

    def __bool__(self):
        return True

    def __str__(self):
        return f"polar({format_fraction(self.modulus)}, {self.phase!r})"


Coefficient = Union[GaussianRational, Polar]


def is_exact(c: Coefficient) -> bool:
    return isinstance(c, GaussianRational)


def _add_coeffs(a: Coefficient, b: Coefficient) -> Coefficient | None:
    if is_exact(a) and is_exact(b):
        s = a + b
        return s if s else None
    if isinstance(a, Polar) and isinstance(b, Polar) and a.phase == b.phase:
        return Polar(a.modulus + b.modulus, a.phase)
    z = complex(a) + complex(b)
    if abs(z) == 0.0:
        return None
    return Polar(Fraction(abs(z)), cmath.phase(z))


def _mul_coeffs(a: Coefficient, b: Coefficient) -> Coefficient:
    if is_exact(a) and is_exact(b):
        return a * b
    if isinstance(a, Polar) and isinstance(b, Polar):
        return Polar(a.modulus * b.modulus, a.phase + b.phase)
    z = complex(a) * complex(b)
    return Polar(Fraction(abs(z)), cmath.phase(z))


@dataclass(frozen=True)
class Monomial:
    m: int
    n: int
    coeff: Coefficient

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("exponents must be nonnegative")
        if is_exact(self.coeff) and not self.coeff:
            raise ValueError("monomial coefficient must be nonzero")

    @property
    def delta(self) -> int:
        return self.m - self.n

    @property
    def exact(self) -> bool:
        return is_exact(self.coeff)

    def exact_coeff(self) -> GaussianRational:
        if not self.exact:
            raise ExactnessViolation(f"term z^{self.m} zb^{self.n} has a polar coefficient")
        return self.coeff

    def conjugate(self) -> "Monomial":
        return Monomial(self.n, self.m, self.coeff.conjugate())

    def __str__(self):
        return str(SymbolPoly([self]))


class SymbolPoly:
    """Normalized polynomial symbol: distinct ``(m, n)``, nonzero
    coefficients, terms sorted by ``(m, n)``. Immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable = ()):
        acc: dict[tuple[int, int], Coefficient] = {}
        for t in terms:
            if not isinstance(t, Monomial):
                m, n, c = t
                if not isinstance(c, (GaussianRational, Polar)):
                    c = GaussianRational.coerce(c)
                if is_exact(c) and not c:
                    continue
                t = Monomial(m, n, c)
            key = (t.m, t.n)
            if key in acc:
                s = _add_coeffs(acc[key], t.coeff)
                if s is None:
                    del acc[key]
                else:
                    acc[key] = s
            else:
                acc[key] = t.coeff
        self.terms = tuple(Monomial(m, n, c) for (m, n), c in sorted(acc.items()))

    @classmethod
    def monomial(cls, m: int, n: int, coeff=1) -> "SymbolPoly":
        return cls([(m, n, coeff)])

    def __eq__(self, other):
        return isinstance(other, SymbolPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "SymbolPoly") -> "SymbolPoly":
        return SymbolPoly(self.terms + other.terms)

    def __neg__(self):
        return self.scale(GaussianRational(-1))

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        return f"SymbolPoly({format_symbol(self)!r})"

    def __str__(self):
        return format_symbol(self)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def exact(self) -> bool:
        return all(t.exact for t in self.terms)

    def scale(self, c) -> "SymbolPoly":
        if not isinstance(c, (GaussianRational, Polar)):
            c = GaussianRational.coerce(c)
        if is_exact(c) and not c:
            return SymbolPoly()
        return SymbolPoly(Monomial(t.m, t.n, _mul_coeffs(c, t.coeff)) for t in self.terms)

    def without_constant(self) -> "SymbolPoly":
        return SymbolPoly(t for t in self.terms if (t.m, t.n) != (0, 0))

    def deltas(self) -> list[int]:
        return [t.delta for t in self.terms]

    def numeric(self) -> list[tuple[int, int, complex]]:
        return [(t.m, t.n, complex(t.coeff)) for t in self.terms]


def conjugate_symbol(s: SymbolPoly) -> SymbolPoly:
    """Symbol of the adjoint: ``(m, n, a) -> (n, m, conj(a))``."""
    return SymbolPoly(t.conjugate() for t in s.terms)


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolClass:
    tag: str
    delta: int | None = None

    @property
    def fixed_degree(self) -> bool:
        return self.delta is not None

    def __str__(self):
        if self.tag == "FixedRelativeDegree":
            return f"FixedRelativeDegree({self.delta})"
        return self.tag if self.delta is None else f"{self.tag} (fixed relative degree {self.delta})"


def classify(s: SymbolPoly) -> SymbolClass:
    if s.is_zero():
        return SymbolClass("FixedRelativeDegree", 0)
    ds = set(s.deltas())
    delta = ds.pop() if len(ds) == 1 else None
    if all(t.n == 0 for t in s.terms):
        return SymbolClass("Analytic", delta)
    if all(t.m == 0 for t in s.terms):
        return SymbolClass("CoAnalytic", delta)
    if all(t.m == 0 or t.n == 0 for t in s.terms):
        return SymbolClass("Harmonic", delta)
    if delta is not None:
        return SymbolClass("FixedRelativeDegree", delta)
    return SymbolClass("General")


@dataclass(frozen=True)
class RadialProfile:
    """``phi(r e^{it}) = e^{i delta t} phi0(r)`` with
    ``phi0(r) = sum a * r^p`` over ``components``."""

    delta: int
    components: tuple[tuple[int, Coefficient], ...]

    @property
    def exact(self) -> bool:
        return all(is_exact(a) for _, a in self.components)


def radial_profile(s: SymbolPoly) -> RadialProfile:
    cls = classify(s)
    if not cls.fixed_degree:
        raise NotFixedDegree(f"{s} has no fixed relative degree")
    comps = sorted(((t.m + t.n, t.coeff) for t in s.terms), key=lambda pc: pc[0])
    return RadialProfile(cls.delta, tuple(comps))


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _factors(m: int, n: int) -> str:
    parts = []
    if m:
        parts.append("z" if m == 1 else f"z^{m}")
    if n:
        parts.append("zb" if n == 1 else f"zb^{n}")
    return " ".join(parts)


def format_symbol(s: SymbolPoly) -> str:
    if s.is_zero():
        return "0"
    out = []
    for idx, t in enumerate(s.terms):
        fac = _factors(t.m, t.n)
        c = t.coeff
        sign = "+"
        if isinstance(c, Polar):
            coef = str(c)
        elif c.is_real():
            if c.re < 0:
                sign = "-"
            mag = abs(c.re)
            coef = "" if (mag == 1 and fac) else format_fraction(mag)
            if "/" in coef and fac:
                coef = f"({coef})"
        else:
            coef = f"({format_fraction(c.re)}{'-' if c.im < 0 else '+'}{format_fraction(abs(c.im))}i)"
        body = " ".join(x for x in (coef, fac) if x)
        if idx == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, msg, pos=None):
        raise ParseError(self.i if pos is None else pos, msg)

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self, s=None):
        self.ws()
        if s is None:
            return self.text[self.i] if self.i < len(self.text) else ""
        return self.text.startswith(s, self.i)

    def eat(self, s) -> bool:
        if self.peek(s):
            self.i += len(s)
            return True
        return False

    def expect(self, s):
        if not self.eat(s):
            self.error(f"expected {s!r}")

    def integer(self) -> int:
        self.ws()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.text[start:self.i])

    def number(self) -> Fraction:
        self.ws()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isdigit() or self.text[self.i] == "."):
            self.i += 1
        lit = self.text[start:self.i]
        if not lit or lit == ".":
            self.error("expected a number", start)
        try:
            val = Fraction(lit)
        except ValueError:
            self.error(f"malformed number {lit!r}", start)
        save = self.i
        if self.eat("/"):
            if not self.peek().isdigit():
                self.i = save
                return val
            den = self.number()
            if den == 0:
                self.error("division by zero", save)
            val /= den
        return val

    # -- coefficients -----------------------------------------------------
    def gaussian_body(self) -> GaussianRational:
        total = GaussianRational()
        first = True
        while True:
            sign = 1
            if self.eat("+"):
                pass
            elif self.eat("-"):
                sign = -1
            elif not first:
                break
            first = False
            if self.peek() == "i":
                self.i += 1
                total += GaussianRational(0, sign)
                continue
            val = self.number()
            self.eat("*")
            if self.peek() == "i":
                self.i += 1
                total += GaussianRational(0, sign * val)
            else:
                total += GaussianRational(sign * val, 0)
            if self.peek() not in ("+", "-"):
                break
        return total

    def angle_expr(self) -> float:
        val = self.angle_term()
        while True:
            if self.eat("+"):
                val += self.angle_term()
            elif self.eat("-"):
                val -= self.angle_term()
            else:
                return val

    def angle_term(self) -> float:
        val = self.angle_atom()
        while True:
            if self.eat("*"):
                val *= self.angle_atom()
            elif self.eat("/"):
                pos = self.i
                d = self.angle_atom()
                if d == 0:
                    self.error("division by zero in angle", pos)
                val /= d
            else:
                return val

    def angle_atom(self) -> float:
        if self.eat("-"):
            return -self.angle_atom()
        if self.eat("("):
            v = self.angle_expr()
            self.expect(")")
            return v
        if self.eat("pi"):
            return math.pi
        self.ws()
        start = self.i
        while self.i < len(self.text) and (self.text[self.i].isdigit() or self.text[self.i] in ".eE"
                                           or (self.text[self.i] in "+-" and self.text[self.i - 1] in "eE")):
            self.i += 1
        try:
            return float(self.text[start:self.i])
        except ValueError:
            self.error("expected an angle", start)

    def coefficient(self) -> Coefficient | None:
        if self.peek("polar"):
            self.i += len("polar")
            self.expect("(")
            mod = self.number()
            if mod <= 0:
                self.error("polar modulus must be positive")
            self.expect(",")
            ang = self.angle_expr()
            self.expect(")")
            return Polar(mod, ang)
        if self.peek() == "(":
            self.i += 1
            c = self.gaussian_body()
            self.expect(")")
            return c
        ch = self.peek()
        if ch.isdigit() or ch == ".":
            val = self.number()
            self.eat("*")
            if self.peek() == "i":
                self.i += 1
                return GaussianRational(0, val)
            return GaussianRational(val)
        if ch == "i":
            self.i += 1
            return GaussianRational(0, 1)
        return None

    # -- factors ----------------------------------------------------------
    def factor(self) -> tuple[int, int] | None:
        if self.peek("|z|"):
            pos = self.i
            self.i += 3
            self.expect("^")
            if self.eat("("):
                e = self.integer()
                self.expect(")")
            else:
                e = self.integer()
            if e % 2:
                raise OddAbsolutePower(pos, f"|z|^{e} is not a polynomial in z and zb")
            return e // 2, e // 2
        if self.peek("zb"):
            self.i += 2
            return 0, (self.integer() if self.eat("^") else 1)
        if self.peek("z"):
            self.i += 1
            return (self.integer() if self.eat("^") else 1), 0
        return None

    def term(self, sign: int) -> tuple[int, int, Coefficient]:
        start = self.i
        c = self.coefficient()
        if c is not None:
            self.eat("*")
        m = n = 0
        nfac = 0
        while True:
            f = self.factor()
            if f is None:
                break
            nfac += 1
            m += f[0]
            n += f[1]
            self.eat("*")
        if c is None and nfac == 0:
            self.error("expected a term", start)
        if c is None:
            c = GaussianRational(1)
        if sign < 0:
            c = _mul_coeffs(GaussianRational(-1), c)
        return m, n, c

    def symbol(self) -> SymbolPoly:
        terms = []
        sign = -1 if self.eat("-") else (self.eat("+") and 1) or 1
        terms.append(self.term(sign))
        while True:
            if self.eat("+"):
                terms.append(self.term(1))
            elif self.eat("-"):
                terms.append(self.term(-1))
            else:
                break
        self.ws()
        if self.i != len(self.text):
            self.error(f"unexpected {self.text[self.i]!r}")
        return SymbolPoly(terms)


def parse_symbol(text: str) -> SymbolPoly:
    """Parse the ASCII symbol grammar into a normalized :class:`SymbolPoly`.

    >>> str(parse_symbol("z + (-3)|z|^2"))
    'z - 3 z zb'
    """
    return _Parser(text).symbol()
