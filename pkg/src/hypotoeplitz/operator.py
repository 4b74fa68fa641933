"""Toeplitz operators with polynomial symbols on the Bergman space.

Two evaluation paths are kept side by side:

* exact, in the monomial basis ``z^k`` with Gaussian-rational entries; all
  inner products are reported in units of pi, using
  ``<z^a, z^b> = pi * [a == b] / (a + 1)``;
* floating, in the orthonormal basis ``phi_k = sqrt((k+1)/pi) z^k``.

The self-commutator ``[T*, T]`` of a polynomial symbol is a banded matrix in
either basis, so finite sections reproduce the quadratic form exactly for
vectors supported inside the section.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.linalg import eig_banded

from . import kernels
from ._kernels_py import gamma
from .arith import GaussianRational, format_fraction
from .errors import ExactnessViolation, SizeTooSmall
from .symbol import Polar, SymbolPoly, conjugate_symbol

log = logging.getLogger(__name__)

MONOMIAL = "monomial"
ORTHONORMAL = "orthonormal"

DEFAULT_SECTION = 200
MAX_SECTION = 1600
WITNESS_THRESHOLD = 1e-10


def project_monomial(m: int, n: int) -> tuple[Fraction, int | None]:
    """Bergman projection of ``z^m zb^n``: ``((m-n+1)/(m+1), m-n)`` when
    ``m >= n``, otherwise ``(0, None)``."""
    if m < 0 or n < 0:
        raise ValueError("exponents must be nonnegative")
    if m < n:
        return Fraction(0), None
    return Fraction(m - n + 1, m + 1), m - n


@dataclass(frozen=True)
class Weight:
    """Squared amplitude of ``T_{z^m zb^n} phi_k`` at ``phi_{k+m-n}``."""

    m: int
    n: int
    k: int

    @property
    def squared_value(self) -> Fraction:
        p = self.k + self.m - self.n
        if p < 0:
            return Fraction(0)
        return Fraction((self.k + 1) * (p + 1), (self.k + self.m + 1) ** 2)

    @property
    def amplitude(self) -> float:
        return math.sqrt(self.squared_value)


class CoefficientVector:
    """Finitely supported vector ``sum u_k e_k`` in the monomial or
    orthonormal basis; ``entries[i]`` is the coefficient of index
    ``offset + i``."""

    __slots__ = ("basis", "entries", "offset")

    def __init__(self, entries: Sequence = (), basis: str = MONOMIAL, offset: int = 0):
        if basis not in (MONOMIAL, ORTHONORMAL):
            raise ValueError(f"unknown basis {basis!r}")
        ents = [GaussianRational.coerce(e) if isinstance(e, (int, Fraction)) and not isinstance(e, bool) else e
                for e in entries]
        while ents and not ents[-1]:
            ents.pop()
        lead = 0
        while lead < len(ents) and not ents[lead]:
            lead += 1
        self.basis = basis
        self.entries = tuple(ents[lead:])
        self.offset = offset + lead if self.entries else 0

    @classmethod
    def from_dict(cls, coeffs: dict, basis: str = MONOMIAL) -> "CoefficientVector":
        if not coeffs:
            return cls((), basis)
        lo, hi = min(coeffs), max(coeffs)
        zero = 0.0 if any(isinstance(v, (float, complex)) for v in coeffs.values()) else GaussianRational()
        return cls([coeffs.get(k, zero) for k in range(lo, hi + 1)], basis, lo)

    @classmethod
    def basis_vector(cls, k: int, basis: str = MONOMIAL, value=None) -> "CoefficientVector":
        if value is None:
            value = GaussianRational(1) if basis == MONOMIAL else 1.0
        return cls([value], basis, k)

    @property
    def exact(self) -> bool:
        return all(isinstance(e, GaussianRational) for e in self.entries)

    def items(self) -> Iterable[tuple[int, object]]:
        for i, e in enumerate(self.entries):
            if e:
                yield self.offset + i, e

    def __len__(self):
        return self.offset + len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, CoefficientVector) and self.basis == other.basis
                and self.offset == other.offset and self.entries == other.entries)

    def __repr__(self):
        return f"CoefficientVector({self.basis}, offset={self.offset}, entries={list(self.entries)!r})"

    def to_orthonormal(self) -> "CoefficientVector":
        """Float orthonormal coordinates of the same function, with the
        factor ``sqrt(pi)`` dropped so that ``form_float = form_exact``
        (both measured in units of pi)."""
        if self.basis == ORTHONORMAL:
            return self
        return CoefficientVector([complex(e) / math.sqrt(k + 1) for k, e in
                                  ((self.offset + i, e) for i, e in enumerate(self.entries))],
                                 ORTHONORMAL, self.offset)

    def to_json(self) -> dict:
        def enc(e):
            if isinstance(e, GaussianRational):
                return [format_fraction(e.re), format_fraction(e.im)]
            z = complex(e)
            return [z.real, z.imag]
        return {"basis": self.basis, "offset": self.offset, "entries": [enc(e) for e in self.entries]}


# ---------------------------------------------------------------------------
# Toeplitz action
# ---------------------------------------------------------------------------


def _require_exact(s: SymbolPoly):
    for t in s.terms:
        if isinstance(t.coeff, Polar):
            raise ExactnessViolation(f"exact path needs Gaussian-rational coefficients; got {t.coeff}")


def apply_toeplitz(s: SymbolPoly, u: CoefficientVector) -> CoefficientVector:
    """``T_s u`` in the basis of ``u`` (exact when both are exact and
    ``u`` is in the monomial basis)."""
    out: dict[int, object] = {}
    if u.basis == MONOMIAL and u.exact:
        _require_exact(s)
        for t in s.terms:
            a = t.coeff
            for k, uk in u.items():
                p = k + t.m - t.n
                if p < 0:
                    continue
                val = a * uk * Fraction(p + 1, k + t.m + 1)
                out[p] = out.get(p, GaussianRational()) + val
        return CoefficientVector.from_dict(out, MONOMIAL) if out else CoefficientVector((), MONOMIAL)
    if u.basis == MONOMIAL:
        for t in s.terms:
            a = complex(t.coeff)
            for k, uk in u.items():
                p = k + t.m - t.n
                if p >= 0:
                    out[p] = out.get(p, 0j) + a * complex(uk) * (p + 1) / (k + t.m + 1)
        return CoefficientVector.from_dict(out, MONOMIAL) if out else CoefficientVector((), MONOMIAL)
    for t in s.terms:
        a = complex(t.coeff)
        for k, uk in u.items():
            p = k + t.m - t.n
            if p >= 0:
                amp = math.sqrt((k + 1) * (p + 1)) / (k + t.m + 1)
                out[p] = out.get(p, 0j) + a * complex(uk) * amp
    return CoefficientVector.from_dict(out, ORTHONORMAL) if out else CoefficientVector((), ORTHONORMAL)


def norm_sq_exact(v: CoefficientVector) -> Fraction:
    """``||v||^2 / pi`` for an exact monomial-basis vector."""
    return sum((e.abs2() / (k + 1) for k, e in v.items()), Fraction(0))


def commutator_form_exact(s: SymbolPoly, u: CoefficientVector) -> Fraction:
    """``<[T_s*, T_s] u, u> / pi`` computed as
    ``(||T_s u||^2 - ||T_{conj s} u||^2) / pi``."""
    if u.basis != MONOMIAL or not u.exact:
        raise ExactnessViolation("exact form needs an exact monomial-basis vector")
    _require_exact(s)
    return norm_sq_exact(apply_toeplitz(s, u)) - norm_sq_exact(apply_toeplitz(conjugate_symbol(s), u))


def _image_with_bound(s: SymbolPoly, u: CoefficientVector):
    """Float ``T_s u`` (orthonormal basis) plus, per output index, the sum of
    absolute values of the contributions and the number of them."""
    vals: dict[int, complex] = {}
    mags: dict[int, float] = {}
    cnt: dict[int, int] = {}
    for t in s.terms:
        a = complex(t.coeff)
        for k, uk in u.items():
            p = k + t.m - t.n
            if p < 0:
                continue
            amp = math.sqrt((k + 1) * (p + 1)) / (k + t.m + 1)
            c = a * complex(uk) * amp
            vals[p] = vals.get(p, 0j) + c
            mags[p] = mags.get(p, 0.0) + abs(a) * abs(complex(uk)) * amp
            cnt[p] = cnt.get(p, 0) + 1
    return vals, mags, cnt


def commutator_form_float(s: SymbolPoly, u: CoefficientVector) -> tuple[float, float]:
    """``<[T_s*, T_s] u, u>`` for an orthonormal-basis vector, with a
    forward rounding-error bound.

    Each output coordinate is a sum of ``c`` products of at most eight
    rounded operations, so it is off by at most ``gamma(c + 8)`` times the
    sum of absolute contributions ``S_p``; squaring and summing ``N``
    coordinates adds ``gamma(N + 2)`` relative to ``sum S_p^2``.
    """
    if u.basis != ORTHONORMAL:
        u = u.to_orthonormal()
    total = 0.0
    err = 0.0
    for sym, sign in ((s, 1.0), (conjugate_symbol(s), -1.0)):
        vals, mags, cnt = _image_with_bound(sym, u)
        n_out = max(len(vals), 1)
        for p, v in vals.items():
            e = gamma(cnt[p] + 8) * mags[p]
            total += sign * (v.real * v.real + v.imag * v.imag)
            err += 2.0 * mags[p] * e + e * e + gamma(n_out + 4) * mags[p] * mags[p]
    err += gamma(4) * abs(total)
    return total, 2.0 * err


def commutator_entry_exact(s: SymbolPoly, j: int, k: int) -> GaussianRational:
    """``<[T_s*, T_s] z^k, z^j> / pi`` exactly."""
    _require_exact(s)
    ek = CoefficientVector.basis_vector(k)
    ej = CoefficientVector.basis_vector(j)

    def inner(v, w):
        wd = dict(w.items())
        acc = GaussianRational()
        for p, vp in v.items():
            if p in wd:
                acc += vp * wd[p].conjugate() * Fraction(1, p + 1)
        return acc

    sb = conjugate_symbol(s)
    return (inner(apply_toeplitz(s, ek), apply_toeplitz(s, ej))
            - inner(apply_toeplitz(sb, ek), apply_toeplitz(sb, ej)))


# ---------------------------------------------------------------------------
# Finite sections
# ---------------------------------------------------------------------------


@dataclass
class HermitianMatrix:
    """Finite section ``M[j][k] = <[T*, T] phi_k, phi_j>`` held in lower band
    storage (``band[d, k] = M[k + d, k]``); the dense view is built from the
    band, so it is Hermitian by construction."""

    band: np.ndarray
    shifts: tuple[int, ...] = field(default=(0,))

    @property
    def dimension(self) -> int:
        return self.band.shape[1]

    @property
    def bandwidth(self) -> int:
        return self.band.shape[0] - 1

    hermitian = True

    def dense(self) -> np.ndarray:
        n = self.dimension
        out = np.zeros((n, n), dtype=np.complex128)
        for d in range(self.bandwidth + 1):
            idx = np.arange(n - d)
            out[idx + d, idx] = self.band[d, : n - d]
            if d:
                out[idx, idx + d] = np.conj(self.band[d, : n - d])
        return out

    def entry(self, j: int, k: int) -> complex:
        if j < k:
            return complex(np.conj(self.entry(k, j)))
        d = j - k
        return complex(self.band[d, k]) if d <= self.bandwidth else 0j

    def eigvalsh(self) -> np.ndarray:
        if not self.band.any():
            return np.zeros(self.dimension)
        return eig_banded(self.band, lower=True, eigvals_only=True)

    def min_eig(self) -> tuple[float, np.ndarray]:
        if not self.band.any():
            v = np.zeros(self.dimension, dtype=np.complex128)
            v[0] = 1.0
            return 0.0, v
        w, v = eig_banded(self.band, lower=True, select="i", select_range=(0, 0))
        return float(w[0]), v[:, 0]

    def max_eig(self) -> float:
        if not self.band.any():
            return 0.0
        n = self.dimension
        w = eig_banded(self.band, lower=True, eigvals_only=True, select="i",
                       select_range=(n - 1, n - 1))
        return float(w[0])

    def to_json(self) -> dict:
        d = self.dense()
        return {"dimension": self.dimension, "units": "orthonormal basis",
                "entries": [[[float(z.real), float(z.imag)] for z in row] for row in d]}

    def to_csv(self) -> str:
        d = self.dense()
        def cell(z):
            re, im = float(z.real), float(z.imag)
            return repr(re) if im == 0 else f"{re!r}{im:+}j"
        return "".join(",".join(cell(z) for z in row) + "\n" for row in d)


def _term_arrays(s: SymbolPoly):
    m = np.array([t.m for t in s.terms], dtype=np.int64)
    n = np.array([t.n for t in s.terms], dtype=np.int64)
    c = [complex(t.coeff) for t in s.terms]
    return m, n, np.array([z.real for z in c]), np.array([z.imag for z in c])


def commutator_matrix(s: SymbolPoly, size: int) -> HermitianMatrix:
    """Finite section of ``[T_s*, T_s]`` on ``phi_0, ..., phi_{size-1}``."""
    if size < 1:
        raise SizeTooSmall(f"section size must be >= 1, got {size}")
    if s.is_zero():
        return HermitianMatrix(np.zeros((1, size), dtype=np.complex128))
    deltas = s.deltas()
    bw = min(max(deltas) - min(deltas), size - 1)
    m, n, re, im = _term_arrays(s)
    band = kernels.commutator_band(m, n, re, im, size, bw)
    shifts = tuple(sorted({a - b for a in deltas for b in deltas if a >= b}))
    return HermitianMatrix(band, shifts)


# ---------------------------------------------------------------------------
# Refutation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A vector ``u`` with ``<[T*, T] u, u> < 0``.

    ``exact_value`` is the form divided by pi (exact symbols); otherwise
    ``float_value`` and ``float_error`` give a certified float value with
    ``float_value + float_error < 0`` (also in units of pi).
    """

    vector: CoefficientVector
    exact_value: Fraction | None = None
    float_value: float | None = None
    float_error: float | None = None
    eigenvalue: float | None = None
    section_size: int | None = None

    @property
    def exact(self) -> bool:
        return self.exact_value is not None

    @property
    def value(self) -> float:
        return float(self.exact_value) if self.exact else self.float_value

    def to_json(self) -> dict:
        out = {"vector": self.vector.to_json()}
        if self.exact:
            out["form_value"] = {"kind": "ExactRationalTimesPi", "value": format_fraction(self.exact_value)}
        else:
            out["form_value"] = {"kind": "Float", "value": self.float_value, "error_bound": self.float_error}
        if self.section_size is not None:
            out["section_size"] = self.section_size
        if self.eigenvalue is not None:
            out["eigenvalue"] = self.eigenvalue
        return out


def _rationalize(v: np.ndarray, scale_bits: int) -> CoefficientVector:
    """Monomial-basis Gaussian-integer approximation of an orthonormal
    eigenvector ``v`` (the factor ``sqrt(pi)`` is irrelevant for the sign)."""
    mon = v * np.sqrt(np.arange(1, len(v) + 1, dtype=np.float64))
    big = np.max(np.abs(mon))
    if big == 0:
        return CoefficientVector((), MONOMIAL)
    mon = mon * (2.0 ** scale_bits / big)
    ents = [GaussianRational(int(round(z.real)), int(round(z.imag))) for z in mon]
    return CoefficientVector(ents, MONOMIAL)


def certify_witness(s: SymbolPoly, u: CoefficientVector, **meta) -> Witness | None:
    """Re-evaluate the form at ``u`` (exactly when possible) and return a
    witness if it is certifiably negative."""
    if s.exact and u.exact and u.basis == MONOMIAL:
        val = commutator_form_exact(s, u)
        return Witness(u, exact_value=val, **meta) if val < 0 else None
    val, err = commutator_form_float(s, u)
    return Witness(u, float_value=val, float_error=err, **meta) if val + err < 0 else None


def find_refutation(s: SymbolPoly, size: int = DEFAULT_SECTION, *,
                    threshold: float = WITNESS_THRESHOLD) -> Witness | None:
    """Search the ``size`` finite section for a negative direction of the
    self-commutator and certify it; ``None`` when nothing is certified."""
    if size < 1:
        raise SizeTooSmall(f"section size must be >= 1, got {size}")
    if s.is_zero():
        return None
    lam, vec = commutator_matrix(s, size).min_eig()
    log.debug("section %d: min eigenvalue %.3e", size, lam)
    if not lam < -threshold:
        return None
    for bits in (30, 50):
        u = _rationalize(vec, bits)
        w = certify_witness(s, u, eigenvalue=lam, section_size=size)
        if w is not None:
            return w
    return None


def scan_refutation(s: SymbolPoly, size: int = DEFAULT_SECTION, max_size: int = MAX_SECTION,
                    **kw) -> tuple[Witness | None, int]:
    """:func:`find_refutation` on sections ``size, 2*size, ...`` up to
    ``max_size``; returns the witness (or ``None``) and the last size tried."""
    while True:
        w = find_refutation(s, size, **kw)
        if w is not None or size >= max_size:
            return w, size
        size = min(2 * size, max_size)
