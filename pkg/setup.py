"""Builds the optional compiled kernels.  The package works without them;
the import in rxtx.kernels falls back to the pure-Python versions."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("rxtx.kernels._speedups",
                   ["src/rxtx/kernels/_speedups.pyx"])],
        language_level=3)
except ImportError:
    extensions = []

setup(ext_modules=extensions)
