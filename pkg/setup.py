"""Build the optional compiled tally kernel.

Usage:
    pip install -e . --no-build-isolation
    python setup.py build_ext --inplace

If Cython or a C compiler is missing the package still installs and the
pure-Python kernel is used.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "pocgroups._tally",
                ["src/pocgroups/_tally.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
