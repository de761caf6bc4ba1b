#!/usr/bin/env python3
"""Package manifest for qweight.

Usage:
    pip install -e .
    pip install -e ".[test]"
"""
from pathlib import Path

from setuptools import find_packages, setup

HERE = Path(__file__).parent

setup(
    name="qweight",
    version="1.0.0",
    description="Exact quantum weight enumerators and QMDS feasibility bounds",
    long_description=(HERE / "README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    python_requires=">=3.10",
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    package_data={
        "qweight.oracle": ["data/*.stab"],
        "qweight.feasibility": ["data/*.jsonl"],
    },
    install_requires=[
        "numpy>=1.24",
        "sympy>=1.12",
        "python-dotenv>=1.0",
    ],
    extras_require={
        "test": ["pytest>=7.4"],
    },
    entry_points={
        "console_scripts": ["qweight=qweight.cli.main:main"],
    },
)
