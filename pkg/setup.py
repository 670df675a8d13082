import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the compiled kernel if possible; the package falls back to the
    pure-Python kernel at import time when the extension is absent."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print("warning: compiled kernel skipped (%s); using pure-Python kernel" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("warning: %s not built (%s); using pure-Python kernel" % (ext.name, exc))


ext_modules = []
cmdclass = {}
if not os.environ.get("LENSKNOT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lensknot._dcore", ["src/lensknot/_dcore.pyx"])],
            language_level="3",
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("warning: Cython unavailable; using pure-Python kernel")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
