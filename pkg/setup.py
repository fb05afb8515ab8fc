import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("FATCOLOR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "fatcolor._ckernels",
                    ["src/fatcolor/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
            annotate=False,
        )

setup(ext_modules=ext_modules)
