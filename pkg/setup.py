import numpy
from setuptools import Extension, setup
from Cython.Build import cythonize

# The compiled kernels are an optional speedup: the package falls back to the
# numpy implementations in signet._kernels.numpy_backend if the build fails.
extensions = [
    Extension(
        "signet._kernels.cython_backend",
        sources=["src/signet/_kernels/cython_backend.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
)
