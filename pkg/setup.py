"""Builds the optional Cython extension; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    ext_modules = cythonize(
        ["src/localcolour/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )

setup(ext_modules=ext_modules)
