"""Build script; compiles the Cython reduction kernel when Cython is available.

Set SATLEN_PURE=1 to skip the extension and install the pure-Python package.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SATLEN_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/satlen/_gbcore.pyx"],
            language_level=3,
            compiler_directives={"boundscheck": False, "wraparound": False},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
