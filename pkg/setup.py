"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension; labelcodes.kernels
falls back to the pure-Python implementations when the compiled module is
missing (or when LABELCODES_PURE_PYTHON=1 is set).
"""
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/labelcodes/_kernels_cy.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
