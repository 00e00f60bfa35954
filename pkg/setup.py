"""Build script: compiles the Cython kernel when possible.

If Cython or a C compiler is unavailable the build falls back to the pure
NumPy kernel; the package selects the backend at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zetaff._kernels._core",
                sources=["src/zetaff/_kernels/_core.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
