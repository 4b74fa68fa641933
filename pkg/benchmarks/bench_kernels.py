"""Compare the compiled kernels with the NumPy fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]

Each kernel is run on identical inputs by both backends; the script checks
that the outputs agree and reports the best-of-N wall time and speed-up.
"""

import argparse
import timeit

import numpy as np

from hypotoeplitz import _kernels_py
from hypotoeplitz.spectral import _disk_mesh

try:
    from hypotoeplitz import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def _cases():
    rng = np.random.default_rng(0)
    coeffs = rng.integers(-10 ** 6, 10 ** 6, size=16).astype(np.float64)
    coeffs[-1] = abs(coeffs[-1]) + 1
    yield "poly_uncertain (deg 15, 10^5 points)", "poly_uncertain", (coeffs, np.abs(coeffs), 0, 100_000)

    m = np.array([1, 2, 3, 5, 0], dtype=np.int64)
    n = np.array([0, 1, 4, 2, 3], dtype=np.int64)
    re, im = rng.normal(size=5), rng.normal(size=5)
    bw = int((m - n).max() - (m - n).min())
    yield "commutator_band (5 terms, size 1600)", "commutator_band", (m, n, re, im, 1600, bw)

    z, tris = _disk_mesh(256, 512)
    w = z + z * np.conj(z)
    x, y = w.real, w.imag
    grid = 512
    dx, dy = (x.max() - x.min()) / grid, (y.max() - y.min()) / grid
    yield "raster_triangles (262k triangles, 512^2)", "raster_triangles", (x, y, tris, x.min(), y.min(), dx, dy, grid)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; only the fallback is available")
        return 1
    print(f"{'kernel':<44}{'python [s]':>12}{'cython [s]':>12}{'speed-up':>10}  agree")
    for label, name, inputs in _cases():
        py, cy = getattr(_kernels_py, name), getattr(_kernels, name)
        out_py, out_cy = py(*inputs), cy(*inputs)
        if name == "commutator_band":
            agree = np.allclose(out_py, out_cy, rtol=1e-13, atol=1e-15)
        else:
            agree = np.array_equal(np.asarray(out_py), np.asarray(out_cy))
        t_py = min(timeit.repeat(lambda: py(*inputs), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: cy(*inputs), number=1, repeat=args.repeat))
        print(f"{label:<44}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x  {agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
