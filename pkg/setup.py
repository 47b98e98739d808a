from setuptools import Extension, setup

# The compiled sweep kernel is optional: the package falls back to the pure
# Python sweeps at import time when the extension is missing.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "ainfty._kernel",
                ["src/ainfty/_kernel.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
