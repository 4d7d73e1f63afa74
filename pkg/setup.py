from setuptools import (
    setup,
    find_packages
    )

VERSION = (0, 1, 0)
AUTHOR = "Pal-Words contributors"


with open("README.md", "r") as f:
    long_description = f.read()


setup(
    name="Pal-Words",
    version=".".join([str(i) for i in list(VERSION)]),
    license="MIT",
    author=AUTHOR,
    description="Exact palindromic generation of words: mu solver, generating sets and verification campaigns",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=[
        "combinatorics-on-words",
        "palindromes",
        "sturmian-words",
        "thue-morse",
        "palindromic-generation",
        ],
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    zip_safe=False,
    platforms="any",
    install_requires=[
        "asgiref>=3.4.1",
        "blinker>=1.4",
        "click>=8.0.3",
        "pydantic>=2.0",
        "pydantic-settings>=2.0.3",
    ],
    extras_require={},
    entry_points={
        "console_scripts": [
            "palwords = palwords.cli:main",
        ],
    },
    python_requires=">=3.9,<4",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: Implementation :: CPython",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
