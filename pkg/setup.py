from setuptools import Extension, setup

# The compiled edit-distance kernel is optional: the package falls back to
# the pure-Python implementation when the extension is unavailable.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "devaime._speedups",
                ["src/devaime/_speedups.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
