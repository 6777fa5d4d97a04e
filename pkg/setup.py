import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with GL2KISIN_NO_EXT=1)
# the package falls back to the pure-Python solver at import time.
ext_modules = []
if os.environ.get("GL2KISIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gl2kisin._fastkernel", ["src/gl2kisin/_fastkernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
