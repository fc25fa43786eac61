from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: the pure-Python kernels are used
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "cyclop._kernels",
                ["src/cyclop/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
