"""Build script: compiles the optional fast kernel.

The compiled extension is a performance mirror of gemcensus._kernel.pure;
if Cython or a C compiler is unavailable the build falls through and the
package runs on the pure-Python kernel instead.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip extension building instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: fast kernel not compiled (%s); "
            "falling back to the pure-Python kernel" % (exc,),
            file=sys.stderr,
        )


def extensions():
    import os

    pyx = "src/gemcensus/_kernel/_fast.pyx"
    if not os.path.exists(pyx):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "gemcensus._kernel._fast",
        [pyx],
        extra_compile_args=["-O2"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
