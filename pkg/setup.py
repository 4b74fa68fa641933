"""Build the optional Cython kernels.

Set HYPOTOEPLITZ_NO_EXT=1 to skip compilation; the package then runs on the
pure-Python kernels in ``hypotoeplitz._kernels_py``.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("HYPOTOEPLITZ_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "hypotoeplitz._kernels",
                    ["src/hypotoeplitz/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )

setup(ext_modules=ext_modules)
