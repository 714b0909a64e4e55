import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CHORDSIEVE_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("chordsieve._ckernel", ["src/chordsieve/_ckernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
