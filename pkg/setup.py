"""Build script for the optional compiled reduction kernel.

The extension is best-effort: if Cython or a C++ toolchain is unavailable the
package installs without it and the pure-Python kernel is used.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    extensions = cythonize(
        [Extension("parres._kernel", ["src/parres/_kernel.pyx"],
                   language="c++", extra_compile_args=["-O2"])],
        language_level=3)
except ImportError:
    extensions = []

setup(ext_modules=extensions)
