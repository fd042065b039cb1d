"""Build script.

The compiled kernel extension is optional: if Cython (or a C compiler) is
unavailable the package installs anyway and falls back to the pure-Python
kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("mpqg._kernels_cy", ["src/mpqg/_kernels_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
