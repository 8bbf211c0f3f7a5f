from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/designs.cpp",
    "src/quadrature.cpp",
    "src/measures.cpp",
    "src/analytics.cpp",
    "src/two_qubit.cpp",
    "src/protocol.cpp",
    "src/experiment_file.cpp",
]

setup(
    ext_modules=[
        Pybind11Extension(
            "qlls._qlls",
            ["bindings/module.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
