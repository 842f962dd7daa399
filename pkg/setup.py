from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to a numpy
# implementation when the extension is absent (see freudenthal._kernels).
try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [
            Extension(
                "freudenthal._kernels._modp",
                ["src/freudenthal/_kernels/_modp.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
