"""Build script: compiles the optional GF(p) Cython kernel.

The package works without the extension (a numpy fallback is selected at
import time); set QUIVERHOM_PURE=1 to skip compilation entirely.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never let a failed extension build abort the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"quiverhom: skipping C extension build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"quiverhom: skipping {ext.name} ({exc})")


ext_modules = []
if os.environ.get("QUIVERHOM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/quiverhom/_gfpcore.pyx"], language_level="3"
        )
    except ImportError:
        print("quiverhom: Cython not available, building pure-Python package")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
