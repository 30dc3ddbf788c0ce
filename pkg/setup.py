"""Build hook for the optional compiled geometry-predicate kernel.

The package is pure Python; if Cython (or a C compiler) is unavailable the
extension is skipped and scissors.geom falls back to the pure kernel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "scissors.geom._predicates_cy",
                ["src/scissors/geom/_predicates_cy.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
