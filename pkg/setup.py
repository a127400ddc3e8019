import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LZSCAN_NO_EXT") and os.path.exists("src/lzscan/_speedups.pyx"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lzscan._speedups", ["src/lzscan/_speedups.pyx"])],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback is selected at import time; the extension is
        # an optional accelerator.
        ext_modules = []

setup(ext_modules=ext_modules)
