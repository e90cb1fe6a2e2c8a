import os

from setuptools import setup

ext_modules = []
if os.environ.get("MONOCREMONA_NO_SPEEDUPS") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/monocremona/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package works without the compiled kernels; the pure-Python
        # fallback is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
