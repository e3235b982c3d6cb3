"""Optional compiled-kernel build.

The package is pure Python by default; when Cython is available the
sparse kernels are compiled into an extension module, which the runtime
picks up automatically (see triggaudin.kernels).  Any build failure
falls back to the pure-Python kernels.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/triggaudin/_kernels_cy.pyx"], language_level=3
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
