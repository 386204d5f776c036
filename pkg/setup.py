"""Build script.

The package is pure Python; a Cython twin of the inner-loop kernel is built
when a compiler and Cython are available.  Installation must never fail for
lack of either, so the extension is strictly optional: any build error is
swallowed and the pure backend is used at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"skipping optional extension: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping optional extension {ext.name}: {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "spinhecke._kernel_cy",
        ["src/spinhecke/_kernel_cy.pyx"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
