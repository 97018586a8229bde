from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("skewbrace._regular_cy", ["src/skewbrace/_regular_cy.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level=3))
