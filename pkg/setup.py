from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("stimcheck._kernels", ["src/stimcheck/_kernels.pyx"])],
        language_level="3",
    )
except ImportError:
    # Pure-Python fallback kernel is used when the extension is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules)
