"""Build script for the optional C extension.

The package is pure Python except for the Levenshtein kernel used by
suggestion ranking. When Cython (and a C compiler) are available the
kernel is compiled from ``_speedups.pyx``; otherwise the build falls
back to the pure-Python implementation selected at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/amharic_metaphone/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
