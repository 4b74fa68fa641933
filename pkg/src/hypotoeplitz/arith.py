"""Exact arithmetic: Gaussian rationals, univariate rational polynomials and
rational functions, and the tail-positivity decision procedure.

Every criterion of the form "for all integers k >= K" is reduced to
:func:`poly_nonneg_on_integer_ray` on a cleared-denominator polynomial.

>>> p = RationalPoly([8, 3])          # 3k + 8
>>> poly_nonneg_on_integer_ray(p, 0).tag
'PositiveOnRay'
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DenominatorVanishes, PreconditionViolated

log = logging.getLogger(__name__)

DEFAULT_CHECK_LIMIT = 10_000


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        return cls(as_fraction(x), Fraction(0))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return format_fraction(self.re)
        im = format_fraction(abs(self.im))
        if self.re == 0:
            return f"{'-' if self.im < 0 else ''}{im}i"
        sign = "-" if self.im < 0 else "+"
        return f"({format_fraction(self.re)}{sign}{im}i)"

    def __repr__(self):
        return f"GaussianRational({self})"


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class RationalPoly:
    """Univariate polynomial with :class:`~fractions.Fraction` coefficients.

    ``coefficients[i]`` multiplies ``k**i``. Instances are immutable.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable = ()):
        c = [as_fraction(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, value) -> "RationalPoly":
        return cls([value])

    @classmethod
    def linear(cls, constant) -> "RationalPoly":
        """The monic linear polynomial ``k + constant``."""
        return cls([constant, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        if isinstance(other, RationalPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == RationalPoly([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"RationalPoly({[format_fraction(c) for c in self._c]})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            mon = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            mag = abs(c)
            coef = format_fraction(mag)
            body = coef if not mon else (mon if mag == 1 else f"{coef}*{mon}")
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    @staticmethod
    def _coerce(other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly([other])

    def __add__(self, other):
        o = RationalPoly._coerce(other)
        n = max(len(self._c), len(o._c))
        a = self._c + (Fraction(0),) * (n - len(self._c))
        b = o._c + (Fraction(0),) * (n - len(o._c))
        return RationalPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self._c)

    def __sub__(self, other):
        return self + (-RationalPoly._coerce(other))

    def __rsub__(self, other):
        return RationalPoly._coerce(other) - self

    def __mul__(self, other):
        o = RationalPoly._coerce(other)
        if not self._c or not o._c:
            return RationalPoly()
        out = [Fraction(0)] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = RationalPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly(i * c for i, c in enumerate(self._c) if i)

    def shift(self, c) -> "RationalPoly":
        """Return ``t -> p(t + c)`` (Taylor shift)."""
        c = as_fraction(c)
        coeffs = list(self._c)
        n = len(coeffs)
        # repeated synthetic division
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                coeffs[j] += c * coeffs[j + 1]
        return RationalPoly(coeffs)

    def divmod(self, other: "RationalPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        q = [Fraction(0)] * max(len(rem) - len(other._c) + 1, 1)
        lead = other.leading
        dd = other.degree
        while len(rem) - 1 >= dd and rem:
            shift = len(rem) - 1 - dd
            f = rem[-1] / lead
            q[shift] = f
            for i, c in enumerate(other._c):
                rem[shift + i] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
        return RationalPoly(q), RationalPoly(rem)

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        lead = self.leading
        return RationalPoly(c / lead for c in self._c)

    def integer_coefficients(self) -> list[int]:
        """Coefficients scaled by a positive integer so that all are integers."""
        if not self._c:
            return []
        lcm = 1
        for c in self._c:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        return [int(c * lcm) for c in self._c]


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else RationalPoly([1])


class RationalFunction:
    """Quotient of two :class:`RationalPoly`, kept in lowest terms with a
    monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = RationalPoly._coerce(num)
        den = RationalPoly([1]) if den is None else RationalPoly._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = RationalPoly(), RationalPoly([1])
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading
        self.num = RationalPoly(c / lead for c in num.coefficients)
        self.den = RationalPoly(c / lead for c in den.coefficients)

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __add__(self, other):
        o = RationalFunction._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFunction._coerce(other))

    def __rsub__(self, other):
        return RationalFunction._coerce(other) - self

    def __mul__(self, other):
        o = RationalFunction._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RationalFunction._coerce(other)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RationalFunction._coerce(other) / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def shift(self, c) -> "RationalFunction":
        return RationalFunction(self.num.shift(c), self.den.shift(c))

    def __eq__(self, other):
        o = RationalFunction._coerce(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(({self.num}) / ({self.den}))"


def inv_linear(c) -> RationalFunction:
    """``1 / (k + c)``."""
    return RationalFunction(RationalPoly([1]), RationalPoly.linear(c))


# ---------------------------------------------------------------------------
# Tail positivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of :func:`poly_nonneg_on_integer_ray`.

    ``shifted_coefficients`` holds the coefficients of ``p(checked_up_to + t)``
    when the verdict is ``PositiveOnRay``; together with the exhaustive range
    ``[start, checked_up_to]`` it is the whole certificate.
    """

    tag: str
    start: int
    checked_up_to: int
    negative_at: int | None = None
    shifted_coefficients: tuple[Fraction, ...] | None = None
    strict: bool = False
    reason: str = ""

    @property
    def positive(self) -> bool:
        return self.tag == "PositiveOnRay"

    def to_json(self) -> dict:
        out = {"tag": self.tag, "start": self.start, "checked_up_to": self.checked_up_to,
               "strict": self.strict}
        if self.negative_at is not None:
            out["negative_at"] = self.negative_at
        if self.shifted_coefficients is not None:
            out["shifted_coefficients"] = [format_fraction(c) for c in self.shifted_coefficients]
        if self.reason:
            out["reason"] = self.reason
        return out


def _int_horner(coeffs: Sequence[int], k: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def _float_filter(coeffs: Sequence[int], k0: int, k1: int) -> np.ndarray:
    """Integers in ``[k0, k1]`` at which a rounding-error-bounded float
    evaluation does not already prove ``p(k) > 0``."""
    from . import kernels

    big = max(abs(c) for c in coeffs)
    scaled = np.array([float(Fraction(c, big)) for c in coeffs], dtype=np.float64)
    return kernels.poly_uncertain(scaled, np.abs(scaled), k0, k1)


def poly_nonneg_on_integer_ray(p: RationalPoly, K: int, check_limit: int = DEFAULT_CHECK_LIMIT,
                               *, strict: bool = False) -> PositivityVerdict:
    """Decide ``p(k) >= 0`` (``> 0`` when *strict*) for all integers ``k >= K``.

    Every integer in ``[K, check_limit]`` is checked; values a float
    evaluation with a rigorous rounding bound cannot place strictly above
    zero are re-evaluated in exact integer arithmetic. The tail beyond
    ``check_limit`` is certified when ``p(check_limit + t)`` has nonnegative
    coefficients and a positive leading coefficient.
    """
    K = int(K)
    check_limit = int(check_limit)
    if check_limit < K:
        raise PreconditionViolated(f"check_limit {check_limit} < ray start {K}")
    if p.is_zero():
        if strict:
            return PositivityVerdict("NegativeAt", K, K, negative_at=K, strict=True,
                                     reason="zero polynomial is not strictly positive")
        return PositivityVerdict("PositiveOnRay", K, check_limit, shifted_coefficients=(),
                                 reason="zero polynomial")

    ints = p.integer_coefficients()
    for k in _float_filter(ints, K, check_limit):
        v = _int_horner(ints, int(k))
        if v < 0 or (strict and v == 0):
            return PositivityVerdict("NegativeAt", K, int(k), negative_at=int(k), strict=strict)

    shifted = p.shift(check_limit).coefficients
    if shifted[-1] > 0 and all(c >= 0 for c in shifted):
        return PositivityVerdict("PositiveOnRay", K, check_limit, shifted_coefficients=shifted,
                                 strict=strict)
    return PositivityVerdict("Inconclusive", K, check_limit, strict=strict,
                             reason="shifted polynomial has a negative coefficient")


# ---------------------------------------------------------------------------
# Certified suprema of rational functions
# ---------------------------------------------------------------------------


def rational_fn_sup_on_ray(num: RationalPoly, den: RationalPoly, K, *,
                           check_limit: int = DEFAULT_CHECK_LIMIT) -> Fraction:
    """Exact upper bound for ``num(k) / den(k)`` over integers ``k >= K``.

    Monotone functions are detected through the sign of the forward
    difference ``q(k) - q(k+1)``; the bound is then ``q(K)`` or the limit at
    infinity. Otherwise the maximum over ``[K, K + 1000]`` (and the limit)
    is widened until ``B * den - num >= 0`` is certified on the ray.
    """
    K = math.ceil(as_fraction(K))
    limit = max(check_limit, K)
    dv = poly_nonneg_on_integer_ray(den, K, limit, strict=True)
    if not dv.positive:
        raise DenominatorVanishes(f"denominator {den} is not certified positive on [{K}, oo): {dv.tag}")
    if num.degree > den.degree:
        raise PreconditionViolated("rational function is unbounded on the ray")
    at_inf = num.leading / den.leading if num.degree == den.degree else Fraction(0)
    if num.is_zero():
        return Fraction(0)

    num1, den1 = num.shift(1), den.shift(1)
    diff = num * den1 - num1 * den   # sign of q(k) - q(k+1)
    if poly_nonneg_on_integer_ray(diff, K, limit).positive:
        log.debug("decreasing on ray; sup attained at k=%s", K)
        return num(K) / den(K)
    if poly_nonneg_on_integer_ray(-diff, K, limit).positive:
        log.debug("increasing on ray; sup is the limit at infinity")
        return at_inf

    best = max([num(k) / den(k) for k in range(K, K + 1001)] + [at_inf])
    slack = abs(best) / 1024 + Fraction(1, 1024)
    bound = best
    for _ in range(40):
        if poly_nonneg_on_integer_ray(den * bound - num, K, limit).positive:
            log.debug("non-monotone; grid bound %s certified", bound)
            return bound
        bound = best + slack
        slack *= 2
    raise PreconditionViolated("could not certify an upper bound on the ray")
