# cython: language_level=3
"""Compiled versions of the kernels in ``_kernels_py``; same signatures,
same results."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, ceil, floor, isfinite

cnp.import_array()

cdef double UNIT_ROUNDOFF = 2.0 ** -53


cdef inline double _gamma(int n):
    return n * UNIT_ROUNDOFF / (1.0 - n * UNIT_ROUNDOFF)


def poly_uncertain(double[::1] c, double[::1] cabs, long k0, long k1):
    cdef Py_ssize_t deg = c.shape[0]
    cdef double g = 2.0 * _gamma(2 * <int>deg + 4)
    cdef long k
    cdef Py_ssize_t i
    cdef double kf, val, mag, err
    out = []
    for k in range(k0, k1 + 1):
        kf = <double>k
        val = 0.0
        mag = 0.0
        for i in range(deg - 1, -1, -1):
            val = val * kf + c[i]
            mag = mag * kf + cabs[i]
        err = g * mag
        if not (isfinite(val) and isfinite(err) and val - err > 0.0):
            out.append(k)
    return np.array(out, dtype=np.int64)


def commutator_band(m_in, n_in, re_in, im_in, Py_ssize_t size, Py_ssize_t bw):
    cdef long[::1] m = np.ascontiguousarray(m_in, dtype=np.int64)
    cdef long[::1] n = np.ascontiguousarray(n_in, dtype=np.int64)
    cdef double[::1] re = np.ascontiguousarray(re_in, dtype=np.float64)
    cdef double[::1] im = np.ascontiguousarray(im_in, dtype=np.float64)
    cdef Py_ssize_t nt = m.shape[0]
    band_np = np.zeros((bw + 1, size), dtype=np.complex128)
    cdef double complex[:, ::1] band = band_np
    cdef Py_ssize_t t, s, k, j
    cdef long d, p, q, dt, ds
    cdef double r, d1, d2, cr, ci, scale
    for t in range(nt):
        dt = m[t] - n[t]
        for s in range(nt):
            ds = m[s] - n[s]
            d = dt - ds
            if d < 0 or d > bw:
                continue
            # a_t * conj(a_s)
            cr = re[t] * re[s] + im[t] * im[s]
            ci = im[t] * re[s] - re[t] * im[s]
            for k in range(size - d):
                j = k + d
                p = k + dt
                q = k - ds
                d1 = (<double>k + m[t] + 1.0) * (<double>j + m[s] + 1.0)
                if p >= 0 and q >= 0:
                    d2 = (<double>q + m[t] + 1.0) * (<double>q + m[s] + 1.0)
                    r = ((p + 1.0) * d2 - (q + 1.0) * d1) / (d1 * d2)
                elif p >= 0:
                    r = (p + 1.0) / d1
                elif q >= 0:
                    d2 = (<double>q + m[t] + 1.0) * (<double>q + m[s] + 1.0)
                    r = -(q + 1.0) / d2
                else:
                    continue
                band[d, k] = band[d, k] + (cr * r + 1j * (ci * r))
    for d in range(bw + 1):
        for k in range(size - d):
            scale = sqrt((k + d + 1.0) * (k + 1.0))
            band[d, k] = band[d, k] * scale
    for k in range(size):
        band[0, k] = band[0, k].real
    return band_np


cdef inline void _range(double lo, double hi, double origin, double step, long grid,
                        long* a, long* b):
    a[0] = <long>ceil((lo - origin) / step - 0.5)
    b[0] = <long>floor((hi - origin) / step - 0.5)
    if a[0] < 0:
        a[0] = 0
    if a[0] > grid - 1:
        a[0] = grid - 1
    if b[0] > grid - 1:
        b[0] = grid - 1
    if b[0] < -1:
        b[0] = -1


def raster_triangles(xs_in, ys_in, tris_in, double x0, double y0, double dx, double dy, long grid):
    cdef double[::1] xs = np.ascontiguousarray(xs_in, dtype=np.float64)
    cdef double[::1] ys = np.ascontiguousarray(ys_in, dtype=np.float64)
    cdef long[:, ::1] tris = np.ascontiguousarray(tris_in, dtype=np.int64)
    mask_np = np.zeros((grid, grid), dtype=np.uint8)
    cdef unsigned char[:, ::1] mask = mask_np
    cdef Py_ssize_t T = tris.shape[0], ti
    cdef double ax, ay, bx, by, cx, cy, px, py, e0, e1, e2
    cdef long ix0, ix1, iy0, iy1, ix, iy
    for ti in range(T):
        ax = xs[tris[ti, 0]]; ay = ys[tris[ti, 0]]
        bx = xs[tris[ti, 1]]; by = ys[tris[ti, 1]]
        cx = xs[tris[ti, 2]]; cy = ys[tris[ti, 2]]
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0.0:
            continue
        _range(min(ax, bx, cx), max(ax, bx, cx), x0, dx, grid, &ix0, &ix1)
        _range(min(ay, by, cy), max(ay, by, cy), y0, dy, grid, &iy0, &iy1)
        for iy in range(iy0, iy1 + 1):
            py = y0 + (iy + 0.5) * dy
            for ix in range(ix0, ix1 + 1):
                px = x0 + (ix + 0.5) * dx
                e0 = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                e1 = (cx - bx) * (py - by) - (cy - by) * (px - bx)
                e2 = (ax - cx) * (py - cy) - (ay - cy) * (px - cx)
                if (e0 >= 0 and e1 >= 0 and e2 >= 0) or (e0 <= 0 and e1 <= 0 and e2 <= 0):
                    mask[iy, ix] = 1
    return mask_np
