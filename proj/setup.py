import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name, sourcedir="."):
        super().__init__(name, sources=[])
        self.sourcedir = str(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    # drives the top-level CMake build and copies the extension into place
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                ext.sourcedir,
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_catgate"],
            cwd=build_dir,
            check=True,
        )
        built = sorted(build_dir.glob("_catgate*.so"))
        if not built:
            raise RuntimeError("cmake did not produce the _catgate extension")
        out.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], out)


setup(
    ext_modules=[CMakeExtension("catgate._catgate")],
    cmdclass={"build_ext": CMakeBuild},
)
