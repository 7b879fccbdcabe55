"""Build script for the optional compiled kernel.

The package works without the extension: ``strsearch._backend`` falls back to
the pure-Python kernels when ``strsearch._ckernel`` cannot be imported.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "strsearch._ckernel",
                ["src/strsearch/_ckernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    extensions = []

setup(ext_modules=extensions)
