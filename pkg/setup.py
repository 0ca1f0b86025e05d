from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("greedygossip._core", ["src/greedygossip/_core.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
