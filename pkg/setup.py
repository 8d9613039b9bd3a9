#!/usr/bin/env python

from setuptools import setup
import os

version_txt_path = os.path.join(os.path.dirname(__file__), "slitlab", "version.txt")
with open(version_txt_path, "r") as version_file:
    slitlab_version = version_file.readline().strip()

setup(
    name="slitlab",
    version=slitlab_version,
    packages=["slitlab"],
    package_dir={"slitlab": "slitlab"},
    description="slitlab - numerical laboratory for the symmetric two-slit experiment",
    package_data={"slitlab": ["version.txt"]},
    install_requires=["numpy", "scipy", "pandas", "matplotlib", "packaging"],
    entry_points={"console_scripts": ["slitlab = slitlab.cli:main"]},
    long_description="slitlab evaluates stationary one- and two-slit wave fields, "
    "integrates probability current lines, decomposes the two-slit state along "
    "its symmetry line and computes wave-particle duality diagnostics",
    license="The MIT License (MIT)",
    platforms="any that supports python 3.8",
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Education",
        "Intended Audience :: Science/Research",
        "Operating System :: MacOS :: MacOS X",
        "Operating System :: Microsoft :: Windows",
        "Operating System :: POSIX",
        "Operating System :: Unix",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Physics",
    ],
)
