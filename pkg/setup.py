import sys
from pathlib import Path

from setuptools import setup, find_packages


if sys.version_info < (3, 8):
    raise RuntimeError("foxh requires Python 3.8+")

with open("README.md", "r", encoding="utf-8") as f:
    long_description = f.read()

about = {}
exec(Path("foxh", "__version__.py").read_text(encoding="utf-8"), about)


setup(
    name=about["__title__"],
    version=about["__version__"],
    author=about["__author__"],
    description=about["__description__"],
    long_description=long_description,
    long_description_content_type="text/markdown",
    url=about["__url__"],
    packages=find_packages(exclude=("tests", "tests.*")),
    install_requires=["numpy >= 1.20", "scipy >= 1.6"],
    extras_require={"test": ["pytest >= 7.0", "mpmath >= 1.1"]},
    entry_points={"console_scripts": ["foxh = foxh.cli:main"]},
    python_requires=">=3.8",
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
    ],
)
