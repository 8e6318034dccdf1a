import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QREDUCE_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("qreduce._jacobi", ["src/qreduce/_jacobi.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install pure-Python only, the package falls back at import.
        ext_modules = []

setup(ext_modules=ext_modules)
