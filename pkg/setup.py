"""Build script: compiles the enumeration kernel if Cython is available.

The package works without the extension (pure-Python fallback selected at
import time), so a failed compile only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/neronjac/_speedups.pyx",
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
