"""Builds the optional Cython kernels; packaging metadata is in pyproject.toml."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; procmatch.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("procmatch._kernels", ["src/procmatch/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
