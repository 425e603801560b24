"""Build script: compiles the optional Cython kernel.

The package is pure Python plus one optional extension, kacpoly._kernel_cy,
holding the hot inner loops (polynomial convolution, gcd, truncated sparse
series products).  If Cython or a C compiler is unavailable the build falls
back to the pure-Python twin kacpoly._kernel_py with identical behaviour.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise continue without it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernel ({exc}); using pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without compiled kernel")
        return []
    return cythonize(
        [Extension("kacpoly._kernel_cy", ["src/kacpoly/_kernel_cy.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
