# setuptools bridge that drives the CMake build of the _b92sec extension and
# stages the b92sec package from the build tree.

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg_args = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DB92SEC_BUILD_PYTHON=ON",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(cfg_args, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_b92sec", "-j"],
            check=True,
        )

        staged = build_dir / "python" / "b92sec"
        dest = Path(self.build_lib) / "b92sec"
        if dest.exists():
            shutil.rmtree(dest)
        shutil.copytree(staged, dest)


setup(
    packages=["b92sec"],
    package_dir={"b92sec": "python/b92sec"},
    ext_modules=[CMakeExtension("b92sec._b92sec")],
    cmdclass={"build_ext": CMakeBuild},
)
