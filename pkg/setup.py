#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright 2023 The OpenBARO Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

""""""

import os

import setuptools
from setuptools import setup


def get_install_requires() -> list:
    return [
        "setuptools>=67.0",
        "gymnasium",
        "click",
        "termcolor",
        "numpy",
        "scipy>=1.6",
        "rich",
        "jsonargparse",
        "jsonschema",
        "pyyaml",
        "tqdm",
        "Jinja2",
    ]


def get_extra_requires() -> dict:
    req = {
        "test": [
            "pytest",
            "pytest-cov",
            "hypothesis",
            "mypy",
            "isort",
            "black",
            "ruff",
        ],
        "dev": ["build", "twine"],
    }
    return req


def get_version() -> str:
    # https://packaging.python.org/guides/single-sourcing-package-version/
    init = open(os.path.join("openbaro", "__init__.py"), "r").read().split()
    return init[init.index("__VERSION__") + 2][1:-1]


setup(
    name="openbaro",
    version=get_version(),
    description="knapsack secretary simulation laboratory for the BARO model",
    long_description=open("README.md", encoding="utf8").read(),
    long_description_content_type="text/markdown",
    author="openbaro contributors",
    author_email="openbaro@googlegroups.com",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={"openbaro.configs": ["schema/*.json"]},
    include_package_data=True,
    entry_points={"console_scripts": ["openbaro=openbaro.cli.cli:run"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Topic :: Software Development :: Libraries :: Python Modules",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    keywords=(
        "online-algorithms knapsack secretary-problem random-order "
        "adversarial-robustness linear-programming simulation"
    ),
    python_requires=">=3.8",
    install_requires=get_install_requires(),
    extras_require=get_extra_requires(),
)
