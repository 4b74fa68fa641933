"""The compiled kernels and the NumPy fallback must agree."""

import os
import subprocess
import sys

import numpy as np
import pytest

from hypotoeplitz import _kernels_py, kernels
from hypotoeplitz.spectral import _disk_mesh

cy = pytest.importorskip("hypotoeplitz._kernels")


def test_selected_backend_is_compiled():
    assert kernels.BACKEND == "cython"


def test_pure_env_forces_fallback():
    out = subprocess.run([sys.executable, "-c", "import hypotoeplitz.kernels as k; print(k.BACKEND)"],
                         env=dict(os.environ, HYPOTOEPLITZ_PURE="1"), capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.parametrize("seed", range(5))
def test_poly_uncertain_agree(seed):
    rng = np.random.default_rng(seed)
    c = rng.integers(-50, 50, size=6).astype(float)
    args = (c, np.abs(c), 0, 3000)
    assert np.array_equal(cy.poly_uncertain(*args), _kernels_py.poly_uncertain(*args))


@pytest.mark.parametrize("seed", range(5))
def test_commutator_band_agree(seed):
    rng = np.random.default_rng(seed)
    t = rng.integers(1, 5)
    m, n = rng.integers(0, 6, size=t), rng.integers(0, 6, size=t)
    re, im = rng.normal(size=t), rng.normal(size=t)
    bw = int((m - n).max() - (m - n).min())
    a = cy.commutator_band(m, n, re, im, 60, bw)
    b = _kernels_py.commutator_band(m, n, re, im, 60, bw)
    assert np.allclose(a, b, rtol=1e-13, atol=1e-15)


def test_raster_agree():
    z, tris = _disk_mesh(32, 64)
    w = z ** 2 + 0.3 * np.conj(z)
    x, y = w.real, w.imag
    g = 128
    args = (x, y, tris, x.min(), y.min(), (x.max() - x.min()) / g, (y.max() - y.min()) / g, g)
    assert np.array_equal(cy.raster_triangles(*args), _kernels_py.raster_triangles(*args))
