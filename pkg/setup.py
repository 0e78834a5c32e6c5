import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SATGEOM_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "satgeom._satkernel",
                    ["src/satgeom/_satkernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: the pure-Python kernel is selected at import time
        ext_modules = []

setup(ext_modules=ext_modules)
