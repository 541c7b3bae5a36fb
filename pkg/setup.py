"""Build script: compiles the optional counting kernel.

The package is fully functional without the extension (a pure-Python twin is
selected at import time); the build therefore never hard-fails on a missing
compiler or Cython.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "homcount._countwalk",
                ["src/homcount/_countwalk.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
