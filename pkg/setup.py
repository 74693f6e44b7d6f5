"""Build script: compiles the optional Cython stepping kernel.

The package works without the extension (a pure-Python fallback is
selected at import time), so a failed compile only costs speed.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("PCFZEROS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pcfzeros/_taylor_c.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
