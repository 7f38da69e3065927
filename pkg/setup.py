"""
Setup script for the Waring-Goldbach workbench
"""

from setuptools import setup, find_packages

TEST_ONLY = ("pytest",)

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    pins = [line.strip() for line in fh if line.strip() and not line.startswith("#")]

requirements = [pin for pin in pins if not pin.startswith(TEST_ONLY)]
test_requirements = [pin for pin in pins if pin.startswith(TEST_ONLY)]

setup(
    name="waring-goldbach-workbench",
    version="0.3.0",
    description="Exponent calculus and numerical checks for p^k + n^l in short intervals",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3 :: Only",
    ],
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={"test": test_requirements},
    entry_points={
        "console_scripts": [
            "wg-bench=workbench.cli:main",
        ],
    },
)
