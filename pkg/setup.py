"""Build hook for the optional compiled kernels.

The package works without them; a failed compile only leaves the
pure-Python kernels in charge.
"""
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            print(f"warning: compiled kernels not built ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"warning: skipping {ext.name} ({exc})", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("cluster_forge._kernels", ["src/cluster_forge/_kernels.pyx"],
                    extra_compile_args=["-O3"])
    try:
        return cythonize([ext], language_level=3, quiet=True)
    except Exception as exc:  # pragma: no cover
        print(f"warning: cythonize failed ({exc})", file=sys.stderr)
        return []


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
