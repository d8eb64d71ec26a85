"""Build script: the canonical-code kernel is compiled when Cython is available."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # the pure-Python kernel is used instead
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("llgames.game._canon", ["src/llgames/game/_canon.pyx"])],
        language_level=3, quiet=True,
    )

setup(ext_modules=ext_modules)
