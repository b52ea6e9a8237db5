"""Build hook for the optional Cython kernels.

Without Cython (or a C compiler) the package still installs and the
pure-Python kernels are used.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("RIGAUG_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("rigaug._kernels", ["src/rigaug/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
