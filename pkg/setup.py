"""Build script: compiles the optional set-cover kernel.

The package is pure Python except for fuzzydom._cover_cy, a Cython build of
the branch-and-bound kernel in fuzzydom._cover_py. If Cython or a C compiler
is unavailable the install still succeeds and the pure kernel is used.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/fuzzydom/_cover_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - depends on build host
    print(f"fuzzydom: skipping compiled kernel ({exc}); "
          "the pure-Python kernel will be used", file=sys.stderr)

setup(ext_modules=ext_modules)
