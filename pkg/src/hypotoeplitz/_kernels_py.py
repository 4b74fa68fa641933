"""Pure NumPy implementations of the hot kernels.

These define the reference semantics; ``_kernels.pyx`` must agree with them.
"""

import numpy as np

UNIT_ROUNDOFF = 2.0 ** -53


def gamma(n):
    return n * UNIT_ROUNDOFF / (1.0 - n * UNIT_ROUNDOFF)


def poly_uncertain(c, cabs, k0, k1):
    """Integers ``k`` in ``[k0, k1]`` where Horner evaluation of the float
    polynomial ``c`` (ascending) fails to prove ``p(k) > 0``.

    The bound ``2*gamma(2d+4) * sum |c_i| k^i`` covers the rounding of the
    coefficients into doubles and of Horner's recurrence.
    """
    c = np.asarray(c, dtype=np.float64)
    cabs = np.asarray(cabs, dtype=np.float64)
    ks = np.arange(k0, k1 + 1, dtype=np.float64)
    val = np.zeros_like(ks)
    mag = np.zeros_like(ks)
    with np.errstate(over="ignore", invalid="ignore"):
        for i in range(len(c) - 1, -1, -1):
            val = val * ks + c[i]
            mag = mag * ks + cabs[i]
        err = 2.0 * gamma(2 * len(c) + 4) * mag
        ok = (val - err) > 0.0
    ok &= np.isfinite(val) & np.isfinite(err)
    return np.arange(k0, k1 + 1, dtype=np.int64)[~ok]


def commutator_band(m, n, re, im, size, bw):
    """Lower band storage of the self-commutator finite section in the
    orthonormal basis: ``band[d, k] = M[k + d, k]``.

    ``M[j, k] = sqrt((j+1)(k+1)) * sum_{t,t'} a_t conj(a_t') * R`` where
    ``R`` is the difference of the two weight products for the term pair.
    """
    m = np.asarray(m, dtype=np.int64)
    n = np.asarray(n, dtype=np.int64)
    a = np.asarray(re, dtype=np.float64) + 1j * np.asarray(im, dtype=np.float64)
    delta = m - n
    band = np.zeros((bw + 1, size), dtype=np.complex128)
    k = np.arange(size, dtype=np.int64)
    kf = k.astype(np.float64)
    for t in range(len(m)):
        for s in range(len(m)):
            d = int(delta[t] - delta[s])
            if d < 0 or d > bw:
                continue
            j = k + d
            valid = j < size
            p = k + delta[t]
            q = k - delta[s]
            jf = j.astype(np.float64)
            pf = p.astype(np.float64)
            qf = q.astype(np.float64)
            d1 = (kf + m[t] + 1) * (jf + m[s] + 1)
            d2 = (qf + m[t] + 1) * (qf + m[s] + 1)
            has1 = p >= 0
            has2 = q >= 0
            with np.errstate(divide="ignore", invalid="ignore"):
                both = ((pf + 1) * d2 - (qf + 1) * d1) / (d1 * d2)
                only1 = (pf + 1) / d1
                only2 = -(qf + 1) / d2
            r = np.where(has1 & has2, both, np.where(has1, only1, np.where(has2, only2, 0.0)))
            r = np.where(valid, r, 0.0)
            band[d] += a[t] * np.conj(a[s]) * r
    for d in range(bw + 1):
        jj = np.arange(size) + d
        band[d] *= np.sqrt((jj + 1.0) * (kf + 1.0))
        band[d, size - d:] = 0.0
    band[0] = band[0].real
    return band


def _pixel_range(lo, hi, origin, step, grid):
    a = np.ceil((lo - origin) / step - 0.5).astype(np.int64)
    b = np.floor((hi - origin) / step - 0.5).astype(np.int64)
    return np.clip(a, 0, grid - 1), np.clip(b, -1, grid - 1)


def raster_triangles(xs, ys, tris, x0, y0, dx, dy, grid):
    """Mark pixels (of a ``grid x grid`` raster anchored at ``(x0, y0)``)
    whose centres lie in at least one triangle. Returns a uint8 mask
    indexed ``[row(y), col(x)]``."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    tris = np.asarray(tris, dtype=np.int64)
    mask = np.zeros((grid, grid), dtype=np.uint8)
    ax, ay = xs[tris[:, 0]], ys[tris[:, 0]]
    bx, by = xs[tris[:, 1]], ys[tris[:, 1]]
    cx, cy = xs[tris[:, 2]], ys[tris[:, 2]]
    area2 = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    keep = area2 != 0.0
    ax, ay, bx, by, cx, cy = (v[keep] for v in (ax, ay, bx, by, cx, cy))
    ix0, ix1 = _pixel_range(np.minimum(np.minimum(ax, bx), cx), np.maximum(np.maximum(ax, bx), cx),
                            x0, dx, grid)
    iy0, iy1 = _pixel_range(np.minimum(np.minimum(ay, by), cy), np.maximum(np.maximum(ay, by), cy),
                            y0, dy, grid)
    if ax.size == 0:
        return mask
    wx = int(max((ix1 - ix0).max(), -1)) + 1
    wy = int(max((iy1 - iy0).max(), -1)) + 1
    for ox in range(wx):
        for oy in range(wy):
            px_i = ix0 + ox
            py_i = iy0 + oy
            sel = (px_i <= ix1) & (py_i <= iy1)
            if not sel.any():
                continue
            px = x0 + (px_i[sel] + 0.5) * dx
            py = y0 + (py_i[sel] + 0.5) * dy
            sax, say, sbx, sby, scx, scy = (v[sel] for v in (ax, ay, bx, by, cx, cy))
            e0 = (sbx - sax) * (py - say) - (sby - say) * (px - sax)
            e1 = (scx - sbx) * (py - sby) - (scy - sby) * (px - sbx)
            e2 = (sax - scx) * (py - scy) - (say - scy) * (px - scx)
            inside = ((e0 >= 0) & (e1 >= 0) & (e2 >= 0)) | ((e0 <= 0) & (e1 <= 0) & (e2 <= 0))
            mask[py_i[sel][inside], px_i[sel][inside]] = 1
    return mask
