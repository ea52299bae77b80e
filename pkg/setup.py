"""Build script: compiles the optional kernel extension when Cython is
available.  The package works without it (pure fallback); build in place
with:  python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
except ImportError:
    pass
else:
    from setuptools import Extension

    ext = Extension(
        "powmon._core",
        sources=["src/powmon/_core.pyx"],
        extra_compile_args=["-O2"],
        optional=True,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
