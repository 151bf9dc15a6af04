#!/usr/bin/env python3
import re
from pathlib import Path

from setuptools import find_packages, setup

here = Path(__file__).parent

VERSION = re.search(
    r'__version__ = "(.+?)"',
    (here / "bignet" / "__init__.py").read_text()
).group(1)

long_description = (here / "README.md").read_text()

setup(
    name="bignet",
    version=VERSION,
    description="Binding bigraphs as proof nets: translation, correctness checking and equality.",
    long_description=long_description,
    classifiers=[
        "License :: OSI Approved :: MIT License",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Compilers",
        'Programming Language :: Python :: 3.9',
    ],
    keywords="bigraphs linear logic proof nets monoidal categories",
    license="MIT",
    packages=find_packages(exclude=["test"]),
    include_package_data=True,
    entry_points={
        "console_scripts": [
            "bignet = bignet.cli:main",
        ],
    },
    python_requires='>=3.9',
    install_requires=[
        "click",
        "texttable",
        "blinker",
        "networkx",
    ],
    extras_require={
        "dev": [
            "sphinx",
            "pytest",
        ]
    }
)
