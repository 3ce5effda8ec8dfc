from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "bwmalab._bwmalab",
    sources=[
        "bindings/module.cpp",
        "src/linalg.cpp",
        "src/params.cpp",
        "src/topo.cpp",
        "src/chain.cpp",
        "src/wigner.cpp",
        "src/entropy.cpp",
    ],
    include_dirs=["include", "vendor", "/usr/include/eigen3"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
