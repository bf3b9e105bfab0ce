from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "pyconifold",
    sources=[
        "src/scalar.cpp",
        "src/novikov.cpp",
        "src/plexpr.cpp",
        "src/geometry.cpp",
        "src/aside.cpp",
        "src/mirror.cpp",
        "src/verify.cpp",
        "python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
