import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PPICOD_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("ppicod._core", sources=["src/ppicod/_core.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules)
