"""Build script: compiles the scalar-kernel extension when Cython is present.

The package works without the extension; ``crvariety._backend`` falls back
to the pure-Python kernels at import time.  Set CRVARIETY_PURE_PYTHON=1 to
skip the compile step entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("CRVARIETY_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "crvariety._kernels_c",
                    ["src/crvariety/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
