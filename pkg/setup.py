"""Setup do pacote Transdutores de Multiplicação."""

from setuptools import setup, find_packages
from pathlib import Path

readme = Path("README.md").read_text(encoding="utf-8")

setup(
    name="transdutores-multiplicacao",
    version="1.0.0",
    author="Seu Nome",
    description="Transdutores de multiplicação em base b: menor laço, varreduras e quocientes",
    long_description=readme,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.10",
    install_requires=[
        "click>=8.1.0",
        "rich>=13.0.0",
        "structlog>=24.1.0",
        "pyyaml>=6.0.0",
        "networkx>=3.2",
    ],
    extras_require={
        "dev": [
            "pytest>=8.0.0",
            "pytest-cov>=4.1.0",
            "pytest-mock>=3.12.0",
            "hypothesis>=6.98.0",
            "black>=24.1.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "transdutores=src.cli.main:cli",
        ],
    },
)
