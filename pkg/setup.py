"""Build script: compiles the optional exact-arithmetic kernels.

The compiled extension is a pure speedup; the package falls back to
``permfunc._kernels_py`` when it is absent.  Set ``PERMFUNC_PURE=1`` to
skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PERMFUNC_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("permfunc._kernels", ["src/permfunc/_kernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
