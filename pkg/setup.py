import os
import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    warnings.warn("Cython not found; installing the pure-Python kernel only.")
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("POLYIAMONDS_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "polyiamonds._ckernel",
                ["src/polyiamonds/_ckernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
