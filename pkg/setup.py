from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "indseqlab._kernels_c",
                ["src/indseqlab/_kernels_c.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # no Cython: install with the pure-Python kernels only
    ext_modules = []

setup(ext_modules=ext_modules)
