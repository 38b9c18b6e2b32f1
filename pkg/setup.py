"""Build hook: compile the row-elimination kernel when Cython is available.

The package is fully functional without the extension; ``exact_linalg``
falls back to the pure-Python kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sphomotopy/_elim_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
