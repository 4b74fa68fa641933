"""Self-commutator norms, image-area estimates and projection norms.

* :func:`monomial_commutator_norm` -- exact supremum of the diagonal of
  ``[T*, T]`` for ``T = T_{z^m zb^n}`` in the orthonormal basis.
* :func:`section_norm` -- largest eigenvalue of a finite section.
* :func:`putnam_area_bound` -- rasterized estimate of ``Area(phi(D))``
  divided by ``pi`` and by ``2 pi``.
* :func:`projection_norm_sq` -- ``||P(z^m zb^n)||^2 / pi``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .arith import DEFAULT_CHECK_LIMIT, RationalFunction, RationalPoly, format_fraction
from .criteria.monomial import diag_function, diag_value
from .criteria.verdict import rf_nonneg_on_ray
from .errors import DegenerateImage, PreconditionViolated
from .operator import DEFAULT_SECTION, commutator_matrix
from .symbol import SymbolPoly

log = logging.getLogger(__name__)

DEFAULT_GRID = 512
MESH_CAP = 1024


def _weight(m: int, n: int, k: int) -> Fraction:
    return (k + 1) * diag_value(m, n, k)


def monomial_commutator_norm(m: int, n: int, *, check_limit: int = DEFAULT_CHECK_LIMIT) -> Fraction:
    """``sup_k (k+1) diag(m, n, k)``: exact norm of the (diagonal)
    self-commutator of ``T_{z^m zb^n}``.

    Entries up to ``K = 10 (m + 1)`` are evaluated exactly; the rest of the
    ray is dominated by certifying ``best - w_k >= 0`` for ``k > K`` on the
    cleared numerator (``K`` doubles if that fails).
    """
    if m == 0 and n == 0:
        return Fraction(0)
    if m <= n:
        raise PreconditionViolated("need m > n (the commutator is not positive otherwise)")
    K = 10 * (m + 1)
    d = m - n
    k = RationalPoly.x()
    w_rf = diag_function(m, n) * RationalFunction(k + 1)
    while True:
        best = max(_weight(m, n, kk) for kk in range(K + 1))
        tail = rf_nonneg_on_ray(RationalFunction(best) - w_rf, max(K + 1, d), max(check_limit, K + 1))
        if tail.positive:
            return best
        if K > 10 ** 6:  # pragma: no cover - w_k -> 0, so this cannot happen
            raise PreconditionViolated("could not certify the tail of the weights")
        K *= 2


def section_norm(s: SymbolPoly, size: int = DEFAULT_SECTION) -> float:
    """Largest eigenvalue of the ``size`` finite section of ``[T*, T]``."""
    return commutator_matrix(s, size).max_eig()


# ---------------------------------------------------------------------------
# area of phi(D)
# ---------------------------------------------------------------------------


def _evaluate(s: SymbolPoly, z: np.ndarray) -> np.ndarray:
    out = np.zeros_like(z)
    zb = np.conj(z)
    for m, n, a in s.numeric():
        out += a * z ** m * zb ** n
    return out


def _disk_mesh(nr: int, nt: int):
    """Polar mesh of the closed unit disk: vertex 0 is the centre, then
    rings ``r = i/nr`` with ``nt`` vertices each."""
    r = np.arange(1, nr + 1) / nr
    t = 2 * np.pi * np.arange(nt) / nt
    rr, tt = np.meshgrid(r, t, indexing="ij")
    z = np.concatenate([[0j], (rr * np.exp(1j * tt)).ravel()])
    idx = 1 + np.arange(nr * nt).reshape(nr, nt)
    nxt = np.roll(idx, -1, axis=1)
    fan = np.stack([np.zeros(nt, dtype=np.int64), idx[0], nxt[0]], axis=1)
    a, b, c, d = idx[:-1], nxt[:-1], idx[1:], nxt[1:]
    tri1 = np.stack([a.ravel(), b.ravel(), d.ravel()], axis=1)
    tri2 = np.stack([a.ravel(), d.ravel(), c.ravel()], axis=1)
    return z, np.concatenate([fan, tri1, tri2]).astype(np.int64)


@dataclass(frozen=True)
class AreaEstimate:
    area: float
    grid: int
    relative_change: float | None

    @property
    def area_over_pi(self) -> float:
        return self.area / math.pi

    @property
    def area_over_2pi(self) -> float:
        return self.area / (2 * math.pi)


def _raster_area(w: np.ndarray, tris: np.ndarray, grid: int) -> float:
    x, y = w.real, w.imag
    x0, x1, y0, y1 = x.min(), x.max(), y.min(), y.max()
    dx, dy = (x1 - x0) / grid, (y1 - y0) / grid
    mask = kernels.raster_triangles(x, y, tris, x0, y0, dx, dy, grid)
    return float(mask.sum()) * float(dx) * float(dy)


def estimate_image_area(s: SymbolPoly, grid: int = DEFAULT_GRID, *, tol: float = 0.01,
                        max_factor: int = 8) -> AreaEstimate:
    """Rasterized ``Area(phi(D))``: the disk mesh is mapped through ``phi``
    and pixel centres covered by an image triangle are counted on a
    ``grid x grid`` raster of the image bounding box; ``grid`` doubles until
    the relative change drops below ``tol`` (at most ``max_factor`` times
    the starting grid)."""
    if grid < 64:
        raise PreconditionViolated("grid must be >= 64")
    nr, nt = min(grid // 2, MESH_CAP // 2), min(grid, MESH_CAP)
    z, tris = _disk_mesh(nr, nt)
    w = _evaluate(s, z)
    scale = 1.0 + float(np.abs(w).max())
    if (w.real.max() - w.real.min()) <= 1e-12 * scale or (w.imag.max() - w.imag.min()) <= 1e-12 * scale:
        raise DegenerateImage(f"image of the disk under {s} has no area")
    g = grid
    area = _raster_area(w, tris, g)
    change = None
    while g < grid * max_factor:
        g *= 2
        nr2, nt2 = min(g // 2, MESH_CAP // 2), min(g, MESH_CAP)
        if (nr2, nt2) != (nr, nt):
            nr, nt = nr2, nt2
            z, tris = _disk_mesh(nr, nt)
            w = _evaluate(s, z)
        new = _raster_area(w, tris, g)
        change = float(abs(new - area) / max(new, 1e-300))
        area = new
        log.debug("grid %d: area %.6f (change %.2e)", g, area, change)
        if change < tol:
            break
    return AreaEstimate(area, g, change)


def putnam_area_bound(s: SymbolPoly, grid: int = DEFAULT_GRID) -> tuple[float, float]:
    """``(Area(phi(D))/pi, Area(phi(D))/(2 pi))`` from :func:`estimate_image_area`."""
    est = estimate_image_area(s, grid)
    return est.area_over_pi, est.area_over_2pi


def projection_norm_sq(m: int, n: int) -> Fraction:
    """``||P(z^m zb^n)||^2 / pi = (m-n+1)/(m+1)^2`` for ``m >= n``; the
    projection vanishes for ``m < n`` and 0 is returned."""
    if m < 0 or n < 0:
        raise PreconditionViolated("exponents must be nonnegative")
    if m < n:
        log.warning("P(z^%d zb^%d) = 0", m, n)
        return Fraction(0)
    return Fraction(m - n + 1, (m + 1) ** 2)


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


@dataclass
class NormReport:
    exact_sup: Fraction | None
    section_lower_bound: float
    section_size: int
    putnam_upper: float | None = None
    half_area_conjecture: float | None = None
    grid: int | None = None

    def to_json(self) -> dict:
        return {"exact_sup": None if self.exact_sup is None else format_fraction(self.exact_sup),
                "section_lower_bound": self.section_lower_bound, "section_size": self.section_size,
                "putnam_upper": self.putnam_upper, "half_area_conjecture": self.half_area_conjecture,
                "grid": self.grid}


def norm_report(s: SymbolPoly, size: int = DEFAULT_SECTION, grid: int | None = DEFAULT_GRID) -> NormReport:
    exact = None
    core = s.without_constant()
    if len(core) == 1:
        t = core.terms[0]
        if t.m > t.n:
            exact = monomial_commutator_norm(t.m, t.n) * t.coeff.abs2() if t.exact else None
    rep = NormReport(exact, section_norm(core, size) if not core.is_zero() else 0.0, size)
    if grid is not None:
        try:
            est = estimate_image_area(s, grid)
        except DegenerateImage:
            log.info("degenerate image; no area bound")
        else:
            rep.putnam_upper, rep.half_area_conjecture, rep.grid = est.area_over_pi, est.area_over_2pi, est.grid
    return rep
