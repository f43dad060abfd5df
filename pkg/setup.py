"""Build script: compiles the optional Cython kernel.

The compiled extension is a pure speedup; if Cython or a C compiler is
unavailable the install proceeds and the package falls back to the
pure-Python kernel at import time.  Set NCCATALAN_NO_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that downgrades compiler failures to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping C extension build ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "the pure-Python kernel will be used")


ext_modules = []
if not os.environ.get("NCCATALAN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("nccatalan._kernel", ["src/nccatalan/_kernel.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; building without the C kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
