"""Build script for the optional compiled kernels.

The package is fully functional without the extension: hopfdg.kernels falls
back to the pure-Python implementation when the compiled module is absent.
Set HOPFDG_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Treat compilation failures as a degraded install, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, broken toolchain, ...
            print(f"warning: compiled kernels skipped ({exc}); "
                  "falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure Python")


extensions = []
if cythonize is not None and not os.environ.get("HOPFDG_NO_EXT"):
    extensions = cythonize(
        [Extension("hopfdg._kernels", ["src/hopfdg/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
